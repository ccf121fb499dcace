#include <doctest.h>

#include "casilab/invariants.hpp"
#include "casilab/io.hpp"
#include "casilab/poly.hpp"

using namespace casilab;

namespace {

Poly from_terms(uint32_t dim, std::initializer_list<std::pair<std::vector<uint32_t>, Scalar>> ts) {
    Poly p(dim);
    for (const auto& [vars, c] : ts) {
        std::vector<Monomial::Entry> entries;
        for (uint32_t v : vars) entries.push_back({v, 1});
        p.add_term(Monomial(entries), c);
    }
    return p;
}

}  // namespace

TEST_CASE("partial derivative follows the power rule") {
    // d/dx1 (x1^2 x2) = 2 x1 x2
    Poly p(3);
    p.add_term(Monomial({{0, 2}, {1, 1}}), Scalar(1));
    Poly d = p.partial(0);
    Poly expect(3);
    expect.add_term(Monomial({{0, 1}, {1, 1}}), Scalar(2));
    CHECK(d == expect);
    CHECK(p.partial(2).is_zero());
}

TEST_CASE("evaluation is exact") {
    Poly p(2);
    p.add_term(Monomial({{0, 2}}), Scalar(1));
    p.add_term(Monomial({{1, 2}}), Scalar(1));
    CHECK(p.eval({Scalar(3), Scalar(4)}) == Scalar(25));
}

TEST_CASE("multiply-then-eval equals eval-then-multiply at random points") {
    PointSampler sampler(42);
    Poly f = from_terms(4, {{{0, 1}, Scalar(2)}, {{1, 2}, Scalar(-1)}, {{3}, Scalar(1, 3)}});
    Poly g = from_terms(4, {{{2, 3}, Scalar(1)}, {{0, 1, 2}, Scalar(5, 7)}});
    Poly fg = f * g;
    for (int t = 0; t < 20; ++t) {
        std::vector<Scalar> pt = sampler.point(4);
        CHECK(fg.eval(pt) == f.eval(pt) * g.eval(pt));
    }
}

TEST_CASE("grlex ordering is deterministic and graded") {
    Monomial x0x0 ({{0, 2}});
    Monomial x0x1 ({{0, 1}, {1, 1}});
    Monomial x1x1 ({{1, 2}});
    Monomial x2 ({{2, 1}});
    CHECK(x2 < x1x1);       // degree first
    CHECK(x1x1 < x0x1);     // x0 > x1: higher power of x0 sorts later
    CHECK(x0x1 < x0x0);
}

TEST_CASE("bidegree split of a bi-homogeneous polynomial is a single component") {
    // p = x1^2 x4 with sub_dim 3 -> single component at (2,1)
    Poly p(6);
    p.add_term(Monomial({{0, 2}, {3, 1}}), Scalar(1));
    auto comps = p.bidegree_components(3);
    REQUIRE(comps.size() == 1);
    CHECK(comps.begin()->first == BiDegree{2, 1});
}

TEST_CASE("bidegree components reconstruct the source exactly") {
    PointSampler sampler(7);
    for (int t = 0; t < 50; ++t) {
        Poly p(5);
        for (int k = 0; k < 6; ++k) {
            std::vector<Monomial::Entry> entries;
            for (uint32_t v = 0; v < 5; ++v) {
                long e = sampler.next().real().get_num().get_si() % 3;
                if (e > 0) entries.push_back({v, static_cast<uint32_t>(e)});
            }
            p.add_term(Monomial(entries), sampler.next());
        }
        uint32_t s = 2;
        Poly sum(5);
        for (const auto& [bd, comp] : p.bidegree_components(s)) {
            sum += comp;
            // homogeneity check at a random scaled point
            for (const auto& [m, c] : comp.terms()) {
                CHECK(m.degree_in(0, s) == bd.sub_deg);
                CHECK(m.degree_in(s, 5) == bd.comp_deg);
            }
        }
        CHECK(sum == p);
    }
}

TEST_CASE("bidegree of products adds componentwise") {
    PointSampler sampler(13);
    for (int t = 0; t < 30; ++t) {
        auto random_bihom = [&](uint32_t a, uint32_t b) {
            Poly p(4);
            // monomials with degree a in x0..x1 and b in x2..x3
            for (int k = 0; k < 3; ++k) {
                uint32_t a0 = a ? static_cast<uint32_t>(
                                      (sampler.next().real().get_num().get_si() + 100) % (a + 1))
                                : 0;
                uint32_t b0 = b ? static_cast<uint32_t>(
                                      (sampler.next().real().get_num().get_si() + 100) % (b + 1))
                                : 0;
                std::vector<Monomial::Entry> e;
                if (a0) e.push_back({0, a0});
                if (a - a0) e.push_back({1, a - a0});
                if (b0) e.push_back({2, b0});
                if (b - b0) e.push_back({3, b - b0});
                p.add_term(Monomial(e), sampler.next());
            }
            return p;
        };
        Poly f = random_bihom(2, 1), g = random_bihom(1, 2);
        Poly fg = f * g;
        if (fg.is_zero()) continue;
        auto comps = fg.bidegree_components(2);
        REQUIRE(comps.size() == 1);
        CHECK(comps.begin()->first == BiDegree{3, 3});
    }
}

TEST_CASE("polynomial exact division") {
    Poly f = from_terms(3, {{{0}, Scalar(1)}, {{1}, Scalar(2)}});
    Poly g = from_terms(3, {{{1, 2}, Scalar(3)}, {{0}, Scalar(-1)}});
    Poly fg = f * g;
    auto q = fg.divide_exact(f);
    REQUIRE(q.has_value());
    CHECK(*q == g);
    Poly h = from_terms(3, {{{2}, Scalar(1)}, {{}, Scalar(1)}});
    CHECK_FALSE(fg.divide_exact(h).has_value());
}

TEST_CASE("parse-print-parse round trip is the identity") {
    PointSampler sampler(99);
    for (int t = 0; t < 25; ++t) {
        Poly p(6);
        for (int k = 0; k < 8; ++k) {
            std::vector<Monomial::Entry> entries;
            for (uint32_t v = 0; v < 6; ++v) {
                long e = (sampler.next().real().get_num().get_si() + 100) % 3;
                if (e > 0) entries.push_back({v, static_cast<uint32_t>(e)});
            }
            Scalar c = sampler.next();
            if ((t + k) % 3 == 0) c = c + sampler.next() * Scalar::i();
            p.add_term(Monomial(entries), c);
        }
        auto j = io::poly_to_json(p);
        Poly q = io::poly_from_json(j);
        CHECK(p == q);
        CHECK(io::poly_to_json(q) == j);
    }
}
