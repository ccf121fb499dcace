// Acceptance suite: one line per criterion, PASS/FAIL, exit 1 on any hard
// failure. Run with --long to include the sp(6) exact-commutator gate.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "casilab/builtins.hpp"
#include "casilab/contraction.hpp"
#include "casilab/enveloping.hpp"
#include "casilab/invariants.hpp"
#include "casilab/io.hpp"
#include "casilab/mlp.hpp"

using namespace casilab;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool soft;                      // failures are recorded, not fatal
    std::function<bool(std::ostream&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<uint32_t, Poly> chain_basis_casimirs(const std::map<uint32_t, Poly>& orig,
                                              const ChainSpec& chain, uint32_t dim) {
    if (!chain.basis_change) return orig;
    auto inv = chain.basis_change->inverse();
    std::vector<std::vector<Scalar>> rows(dim, std::vector<Scalar>(dim));
    for (uint32_t r = 0; r < dim; ++r)
        for (uint32_t c = 0; c < dim; ++c) rows[r][c] = inv->at(r, c);
    std::map<uint32_t, Poly> out;
    for (const auto& [d, p] : orig) out.emplace(d, p.substitute_linear(rows));
    return out;
}

// Textbook first-inversion rewriter; the independent reduction strategy
// for the confluence property.
UEElement rewrite_normal_order(const LieAlgebra& alg, const std::vector<uint32_t>& word) {
    std::map<std::vector<uint32_t>, Scalar> work;
    work[word] = Scalar(1);
    UEElement out = UEElement::zero(alg.dim());
    while (!work.empty()) {
        auto it = work.begin();
        std::vector<uint32_t> w = it->first;
        Scalar c = it->second;
        work.erase(it);
        size_t p = 0;
        while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
        if (p + 1 >= w.size()) {
            Letters l;
            for (uint32_t g : w) l.push_back(static_cast<char>(g));
            auto [jt, ins] = out.terms.emplace(l, c);
            if (!ins) {
                jt->second += c;
                if (jt->second.is_zero()) out.terms.erase(jt);
            }
            continue;
        }
        std::vector<uint32_t> swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        work[swapped] += c;
        if (work[swapped].is_zero()) work.erase(swapped);
        for (const auto& [k, ck] : alg.bracket(w[p], w[p + 1])) {
            std::vector<uint32_t> shorter(w.begin(), w.begin() + p);
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
            work[shorter] += c * ck;
            if (work[shorter].is_zero()) work.erase(shorter);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    bool run_long = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--long") == 0) run_long = true;

    // Shared fixtures.
    LieAlgebra su2 = build_su2();
    LieAlgebra sp6 = build_sp6();
    LieAlgebra su22 = build_su22();
    ChainSpec sp6_chain = sp6_unitary_chain();
    ChainSpec su22_chain = su22_cartan_chain();
    LieAlgebra sp6_cb = chain_basis_algebra(sp6, sp6_chain);

    auto sp6_cas = charpoly_invariants(sp6_charpoly_template(), sp6_casimir_degrees());
    auto su22_cas = charpoly_invariants(su22_charpoly_template(), su22_casimir_degrees());
    auto sp6_cas_cb = chain_basis_casimirs(sp6_cas.invariants, sp6_chain, 21);

    std::vector<Criterion> criteria;

    criteria.push_back({1, "structural validation of the built-in algebras", false,
                        [&](std::ostream& os) {
                            auto t0 = std::chrono::steady_clock::now();
                            bool ok = validate_jacobi(sp6).pass;
                            double t_sp6 = seconds_since(t0);
                            t0 = std::chrono::steady_clock::now();
                            ok = validate_jacobi(su22).pass && ok;
                            double t_su22 = seconds_since(t0);
                            os << "jacobi sp6 " << t_sp6 << "s, su22 " << t_su22 << "s";
                            return ok && t_sp6 < 5.0 && t_su22 < 5.0;
                        }});

    criteria.push_back({2, "invariant counts (seed 0, 5 retries)", false,
                        [&](std::ostream& os) {
                            auto t0 = std::chrono::steady_clock::now();
                            uint32_t n_sp6 = count_invariants(sp6, 0, 5);
                            uint32_t n_su22 = count_invariants(su22, 0, 5);
                            uint32_t n_contr = count_invariants(contract(sp6, sp6_chain), 0, 5);
                            uint32_t n_su2 = count_invariants(su2, 0, 5);
                            double t = seconds_since(t0);
                            os << "N(sp6)=" << n_sp6 << " N(su22)=" << n_su22
                               << " N(contracted sp6)=" << n_contr << " N(su2)=" << n_su2
                               << " in " << t << "s";
                            return n_sp6 == 3 && n_su22 == 3 && n_contr == 3 && n_su2 == 1 &&
                                   t < 30.0;
                        }});

    criteria.push_back({3, "counting formulas", false, [&](std::ostream& os) {
                            MLPCounts g2 = mlp_counts(14, 2, 6, 2, 0);
                            MLPCounts c22 = mlp_counts(15, 3, 3, 3, 0);
                            uint32_t racah = racah_number(15, 3);
                            os << "n(G2 chain)=" << g2.needed << " n(su22 chain)=" << c22.needed
                               << " racah=" << racah;
                            return g2.needed == 2 && c22.needed == 3 && racah == 3;
                        }});

    criteria.push_back(
        {4, "characteristic-polynomial Casimirs are exact invariants", false,
         [&](std::ostream& os) {
             auto t0 = std::chrono::steady_clock::now();
             bool ok = true;
             for (uint32_t d : {2u, 4u, 6u}) {
                 const Poly& p = sp6_cas.invariants.at(d);
                 ok = ok && p.total_degree() == d && is_invariant(sp6, p);
             }
             for (uint32_t d : {2u, 3u, 4u}) {
                 const Poly& p = su22_cas.invariants.at(d);
                 ok = ok && p.total_degree() == d && is_invariant(su22, p);
             }
             double t = seconds_since(t0);
             os << "sp6 degrees 2,4,6 and su22 degrees 2,3,4 in " << t << "s";
             return ok && t < 120.0;
         }});

    criteria.push_back(
        {5, "decomposition patterns", false, [&](std::ostream& os) {
             bool ok = true;
             std::map<uint32_t, size_t> sp6_expected = {{2, 2}, {4, 3}, {6, 4}};
             for (const auto& [d, p] : sp6_cas_cb) {
                 Decomposition dec = bidegree_split(p, 9);
                 ok = ok && dec.components.size() == sp6_expected.at(d);
             }
             std::map<uint32_t, std::vector<BiDegree>> su22_expected = {
                 {2, {{0, 2}, {2, 0}}},
                 {3, {{0, 3}, {1, 2}, {3, 0}}},
                 {4, {{0, 4}, {1, 3}, {2, 2}, {4, 0}}},
             };
             for (const auto& [d, p] : su22_cas.invariants) {
                 Decomposition dec = bidegree_split(p, 3);
                 std::vector<BiDegree> got;
                 for (const auto& [bd, comp] : dec.components) got.push_back(bd);
                 ok = ok && got == su22_expected.at(d);
                 if (d == 3)
                     for (const auto& bd : got) ok = ok && bd.comp_deg != 1;
             }
             os << "sp6 component counts {2,3,4}; su22 {2,3,4} with no t^1 term in C3";
             return ok;
         }});

    criteria.push_back(
        {6, "decomposition components solve the labelling subsystem", false,
         [&](std::ostream& os) {
             auto t0 = std::chrono::steady_clock::now();
             bool ok = true;
             LieAlgebra sp6_contr = contract(sp6, sp6_chain);
             for (const auto& [d, p] : sp6_cas_cb) {
                 Decomposition dec = decompose_casimir(sp6_cb, 9, p);
                 for (const auto& [bd, comp] : dec.components)
                     ok = ok && is_subgroup_scalar(sp6_cb, 9, comp);
                 ok = ok && is_invariant(sp6_contr, dec.contracted_invariant());
             }
             LieAlgebra su22_contr = contract(su22, su22_chain);
             for (const auto& [d, p] : su22_cas.invariants) {
                 Decomposition dec = decompose_casimir(su22, 3, p);
                 for (const auto& [bd, comp] : dec.components)
                     ok = ok && is_subgroup_scalar(su22, 3, comp);
                 ok = ok && is_invariant(su22_contr, dec.contracted_invariant());
             }
             double t = seconds_since(t0);
             os << "every component annihilated by the subalgebra fields; top components "
                   "invariant under the contraction; "
                << t << "s";
             return ok && t < 120.0;
         }});

    criteria.push_back(
        {7, "sp6 labelling-component term counts (soft gate)", true, [&](std::ostream& os) {
             // paper-style (comp, sub): (2,2) -> 126, (2,4) -> 686, (4,2) -> 444
             std::map<std::pair<uint32_t, uint32_t>, size_t> expected = {
                 {{2, 2}, 126}, {{2, 4}, 686}, {{4, 2}, 444}};
             std::map<std::pair<uint32_t, uint32_t>, size_t> got;
             for (const auto& [d, p] : sp6_cas_cb) {
                 Decomposition dec = bidegree_split(p, 9);
                 for (const auto& [bd, comp] : dec.components)
                     got[{bd.comp_deg, bd.sub_deg}] = comp.term_count();
             }
             bool ok = true;
             for (const auto& [key, count] : expected) {
                 size_t actual = got.count(key) ? got.at(key) : 0;
                 os << "(" << key.first << "," << key.second << ")=" << actual;
                 if (actual != count) {
                     os << " [expected " << count << "] ";
                     ok = false;
                 }
                 os << " ";
             }
             return ok;
         }});

    criteria.push_back(
        {8, "su(2,2) nine-operator commuting family (exact)", false, [&](std::ostream& os) {
             auto t0 = std::chrono::steady_clock::now();
             std::vector<std::pair<std::string, Poly>> ops;
             for (int h = 0; h < 3; ++h)
                 ops.push_back({"H" + std::to_string(h + 1), Poly::variable(15, h)});
             for (const auto& [d, p] : su22_cas.invariants)
                 ops.push_back({"C" + std::to_string(d), p});
             std::map<BiDegree, std::string> wanted = {
                 {{0, 3}, "C(3,0)"}, {{0, 4}, "C(4,0)"}, {{1, 3}, "C(3,1)"}};
             for (const auto& [d, p] : su22_cas.invariants) {
                 Decomposition dec = bidegree_split(p, 3);
                 for (const auto& [bd, comp] : dec.components)
                     if (auto it = wanted.find(bd); it != wanted.end())
                         ops.push_back({it->second, comp});
             }
             if (ops.size() != 9) {
                 os << "expected 9 operators, found " << ops.size();
                 return false;
             }
             UEContext ctx(su22);
             std::vector<UEElement> sym;
             for (const auto& [id, p] : ops) sym.push_back(ctx.symmetrize(p));
             bool ok = true;
             int pairs = 0;
             for (size_t i = 0; i < 9; ++i)
                 for (size_t j = i + 1; j < 9; ++j) {
                     UEElement comm = parallel_commutator(su22, sym[i], sym[j], 2);
                     ++pairs;
                     if (!comm.is_zero()) {
                         os << "[" << ops[i].first << "," << ops[j].first << "] != 0 ";
                         ok = false;
                     }
                 }
             std::vector<Poly> family;
             for (const auto& [id, p] : ops) family.push_back(p);
             JacobianCertificate cert = jacobian_independent(family, 15, 0);
             double t = seconds_since(t0);
             os << pairs << " exact pairwise commutators, independence="
                << (cert.independent ? "yes" : "no") << ", " << t << "s";
             return ok && cert.independent && t < 600.0;
         }});

    if (run_long) {
        criteria.push_back(
            {9, "sp(6) commuting family, exact enveloping-algebra gate (long)", false,
             [&](std::ostream& os) {
                 auto t0 = std::chrono::steady_clock::now();
                 // paper-style ids for the three labelling components
                 std::map<std::pair<uint32_t, uint32_t>, std::string> wanted = {
                     {{2, 2}, "C(2,2)"}, {{4, 2}, "C(4,2)"}, {{2, 4}, "C(2,4)"}};
                 std::map<std::string, Poly> comp;
                 for (const auto& [d, p] : sp6_cas_cb) {
                     Decomposition dec = bidegree_split(p, 9);
                     for (const auto& [bd, c] : dec.components)
                         if (auto it = wanted.find({bd.comp_deg, bd.sub_deg});
                             it != wanted.end())
                             comp[it->second] = c;
                 }
                 // Poisson prefilter must pass within 5 minutes.
                 bool poisson_ok = true;
                 std::vector<std::string> ids = {"C(2,2)", "C(4,2)", "C(2,4)"};
                 for (size_t a = 0; a < ids.size(); ++a)
                     for (size_t b = a + 1; b < ids.size(); ++b)
                         poisson_ok = poisson_ok &&
                                      poisson_bracket(sp6_cb, comp[ids[a]], comp[ids[b]])
                                          .is_zero();
                 for (const auto& [d, p] : sp6_cas_cb)
                     for (const auto& id : ids)
                         poisson_ok =
                             poisson_ok && poisson_bracket(sp6_cb, p, comp[id]).is_zero();
                 double t_poisson = seconds_since(t0);
                 os << "poisson prefilter " << (poisson_ok ? "pass" : "FAIL") << " in "
                    << t_poisson << "s; ";
                 bool ok = poisson_ok && t_poisson < 300.0;

                 // Exact gate. Casimir rows via exact centrality; component
                 // pairs by full commutators.
                 UEOptions uo;
                 uo.term_ceiling = 200000000;
                 UEContext ctx(sp6_cb, uo);
                 std::map<std::string, UEElement> sym;
                 for (const auto& id : ids) sym[id] = ctx.symmetrize(comp[id]);
                 for (const auto& [d, p] : sp6_cas_cb) {
                     UEElement cs = ctx.symmetrize(p);
                     bool central = true;
                     for (uint32_t g = 0; g < 21 && central; ++g)
                         central =
                             ctx.commutator(UEElement::generator(21, g), cs).is_zero();
                     if (!central) {
                         os << "C" << d << " not central; ";
                         ok = false;
                     }
                 }
                 for (size_t a = 0; a < ids.size(); ++a)
                     for (size_t b = a + 1; b < ids.size(); ++b) {
                         UEElement comm =
                             parallel_commutator(sp6_cb, sym[ids[a]], sym[ids[b]], 2, uo);
                         if (!comm.is_zero()) {
                             os << "[" << ids[a] << "," << ids[b]
                                << "] != 0 (top degree " << comm.degree() << ", "
                                << comm.term_count() << " terms); ";
                             ok = false;
                         }
                     }
                 os << seconds_since(t0) << "s total";
                 return ok;
             }});
    }

    criteria.push_back(
        {10, "solver-versus-template oracle equivalence", false, [&](std::ostream& os) {
             auto su2_basis = solve_invariants_degree(su2, 2);
             Poly hand(3);
             hand.add_term(Monomial({{0, 2}}), Scalar(1));
             hand.add_term(Monomial({{1, 2}}), Scalar(1));
             hand.add_term(Monomial({{2, 2}}), Scalar(1));
             bool ok = su2_basis.size() == 1 && in_linear_span(su2_basis, hand) &&
                       in_linear_span({hand}, su2_basis[0]);
             auto sp6_basis = solve_invariants_degree(sp6, 2);
             ok = ok && sp6_basis.size() == 1 &&
                  in_linear_span(sp6_basis, sp6_cas.invariants.at(2)) &&
                  in_linear_span({sp6_cas.invariants.at(2)}, sp6_basis[0]);
             os << "su2 quadratic line and sp6 C2 line match the PDE nullspaces";
             return ok;
         }});

    criteria.push_back(
        {11, "randomized property suites (200 cases each, seed 0)", false,
         [&](std::ostream& os) {
             auto t0 = std::chrono::steady_clock::now();
             bool ok = true;
             PointSampler s(0);
             UEContext ctx22(su22);
             auto rand_word = [&](uint32_t dim, size_t len) {
                 std::vector<uint32_t> w;
                 for (size_t i = 0; i < len; ++i)
                     w.push_back(static_cast<uint32_t>(
                         (s.next().real().get_num().get_si() + 100) % dim));
                 return w;
             };
             // PBW confluence
             for (int t = 0; t < 200 && ok; ++t) {
                 auto w = rand_word(15, 1 + t % 6);
                 ok = ctx22.normal_order(w) == rewrite_normal_order(su22, w);
             }
             if (!ok) os << "confluence failed; ";
             // associativity and Jacobi
             auto rand_elem = [&](UEContext& c, uint32_t dim, int words, size_t len) {
                 UEElement e = UEElement::zero(dim);
                 for (int i = 0; i < words; ++i)
                     e += c.normal_order(rand_word(dim, len)) * s.next();
                 return e;
             };
             bool assoc = true, jac = true;
             for (int t = 0; t < 200 && assoc && jac; ++t) {
                 UEElement a = rand_elem(ctx22, 15, 2, 1 + t % 3);
                 UEElement b = rand_elem(ctx22, 15, 2, 1 + (t + 1) % 3);
                 UEElement c = rand_elem(ctx22, 15, 2, 1 + (t + 2) % 2);
                 UEElement l = ctx22.multiply(ctx22.multiply(a, b), c);
                 l -= ctx22.multiply(a, ctx22.multiply(b, c));
                 assoc = l.is_zero();
                 UEElement j = ctx22.commutator(a, ctx22.commutator(b, c));
                 j += ctx22.commutator(b, ctx22.commutator(c, a));
                 j += ctx22.commutator(c, ctx22.commutator(a, b));
                 jac = j.is_zero();
             }
             if (!assoc) os << "associativity failed; ";
             if (!jac) os << "ue jacobi failed; ";
             ok = ok && assoc && jac;
             // poisson antisymmetry + leibniz
             auto rand_poly = [&](uint32_t dim, int terms, uint32_t maxdeg) {
                 Poly p(dim);
                 for (int k = 0; k < terms; ++k) {
                     std::vector<Monomial::Entry> e;
                     for (uint32_t v = 0; v < dim; ++v) {
                         long x = (s.next().real().get_num().get_si() + 100) % (maxdeg + 1);
                         if (x > 0 && e.size() < 3) e.push_back({v, static_cast<uint32_t>(x)});
                     }
                     p.add_term(Monomial(e), s.next());
                 }
                 return p;
             };
             bool poisson = true;
             for (int t = 0; t < 200 && poisson; ++t) {
                 Poly f = rand_poly(3, 3, 2), g = rand_poly(3, 3, 2), h = rand_poly(3, 2, 1);
                 poisson = (poisson_bracket(su2, f, g) + poisson_bracket(su2, g, f)).is_zero();
                 Poly lhs = poisson_bracket(su2, f * g, h);
                 Poly rhs = f * poisson_bracket(su2, g, h) + poisson_bracket(su2, f, h) * g;
                 poisson = poisson && lhs == rhs;
             }
             if (!poisson) os << "poisson failed; ";
             ok = ok && poisson;
             // bidegree reconstruction
             bool recon = true;
             for (int t = 0; t < 200 && recon; ++t) {
                 Poly p = rand_poly(6, 5, 3);
                 Poly sum(6);
                 for (const auto& [bd, c] : p.bidegree_components(3)) sum += c;
                 recon = sum == p;
             }
             if (!recon) os << "bidegree reconstruction failed; ";
             ok = ok && recon;
             // contraction idempotence and abelian complement
             bool contr = true;
             for (int t = 0; t < 200 && contr; ++t) {
                 const bool use_sp6 = t % 2 == 0;
                 const LieAlgebra& base = use_sp6 ? sp6 : su22;
                 ChainSpec chain = use_sp6 ? sp6_chain : su22_chain;
                 LieAlgebra g = contract(base, chain);
                 uint32_t sd = chain.sub_dim;
                 for (uint32_t i = sd; i < g.dim() && contr; ++i)
                     for (uint32_t j = sd; j < g.dim() && contr; ++j)
                         contr = g.bracket(i, j).empty();
                 LieAlgebra gg = contract(g, ChainSpec{std::nullopt, sd});
                 contr = contr && gg == g;
             }
             if (!contr) os << "contraction property failed; ";
             ok = ok && contr;
             double t = seconds_since(t0);
             os << "confluence, associativity, jacobi, poisson, bidegree, contraction in "
                << t << "s";
             return ok && t < 300.0;
         }});

    int hard_failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream detail;
        bool pass = false;
        std::string error;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            error = e.what();
        }
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : (c.soft ? "SOFT-FAIL" : "FAIL"))
                  << " - " << c.label;
        if (!detail.str().empty()) std::cout << " [" << detail.str() << "]";
        if (!error.empty()) std::cout << " [exception: " << error << "]";
        std::cout << std::endl;
        if (!pass && !c.soft) ++hard_failures;
    }
    if (!run_long)
        std::cout << "criterion 9: SKIP - sp(6) exact commutator gate (run with --long)"
                  << std::endl;
    return hard_failures == 0 ? 0 : 1;
}
