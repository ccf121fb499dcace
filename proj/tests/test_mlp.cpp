#include <doctest.h>

#include "casilab/builtins.hpp"
#include "casilab/io.hpp"
#include "casilab/mlp.hpp"

using namespace casilab;

TEST_CASE("coordinate functions are independent with determinant 1") {
    std::vector<Poly> polys = {Poly::variable(3, 0), Poly::variable(3, 1)};
    JacobianCertificate cert = jacobian_independent(polys, 3, 0);
    REQUIRE(cert.independent);
    CHECK(cert.variable_subset == std::vector<uint32_t>{0, 1});
    CHECK(cert.minor_value == Scalar(1));
}

TEST_CASE("functionally dependent families fail the Jacobian search") {
    Poly x = Poly::variable(2, 0);
    Poly x2(2);
    x2.add_term(Monomial({{0, 2}}), Scalar(1));
    JacobianCertificate cert = jacobian_independent({x, x2}, 2, 0);
    CHECK_FALSE(cert.independent);
    CHECK(cert.retries_used == 5);
}

TEST_CASE("empty family is trivially independent") {
    CHECK(jacobian_independent({}, 4, 0).independent);
}

TEST_CASE("more polynomials than variables is immediately dependent") {
    std::vector<Poly> polys = {Poly::variable(2, 0), Poly::variable(2, 1),
                               Poly::variable(2, 0) + Poly::variable(2, 1)};
    CHECK_FALSE(jacobian_independent(polys, 2, 0).independent);
}

TEST_CASE("certificates re-evaluate to their stated minor") {
    LieAlgebra su22 = build_su22();
    auto res = charpoly_invariants(su22_charpoly_template(), su22_casimir_degrees());
    std::vector<Poly> family;
    for (const auto& [d, p] : res.invariants) family.push_back(p);
    JacobianCertificate cert = jacobian_independent(family, 15, 3);
    REQUIRE(cert.independent);
    ScalarMat minor(family.size(), family.size());
    for (size_t r = 0; r < family.size(); ++r)
        for (size_t c = 0; c < family.size(); ++c)
            minor.at(r, c) = family[r].partial(cert.variable_subset[c]).eval(cert.point);
    CHECK(minor.det() == cert.minor_value);
    CHECK(minor.det() != Scalar(0));
}

TEST_CASE("select_candidates returns empty for n = 0") {
    CHECK(select_candidates({}, 0, {}, 5, 0).empty());
}

TEST_CASE("su(2,2) pipeline solves the missing label problem exactly") {
    LieAlgebra su22 = build_su22();
    auto res = charpoly_invariants(su22_charpoly_template(), su22_casimir_degrees());
    MLPOptions opts;
    opts.seed = 0;
    opts.exact_commutators = true;
    opts.threads = 2;
    MLPReport rep = mlp_solve(su22, su22_cartan_chain(), res.invariants, opts);

    CHECK(rep.counts.needed == 3);
    CHECK(rep.counts.available == 6);
    CHECK(rep.n_contracted >= rep.counts.n_s);
    CHECK(rep.selected.size() == 3);
    CHECK(rep.final_set.size() == 9);
    CHECK(rep.independence.independent);
    // counts consistency: selected = non-Casimir operators in the final set
    CHECK(rep.final_set.size() == rep.counts.needed + rep.casimirs.size() +
                                      rep.sub_casimirs.size());
    for (const auto& e : rep.commutation) {
        bool pass = e.verdict == CommutationVerdict::ExactZero ||
                    e.verdict == CommutationVerdict::ExactViaSubalgebra ||
                    e.verdict == CommutationVerdict::ExactCentral;
        CHECK(pass);
    }
    // the published alternative triple appears among the screened subsets
    bool found_published_triple = false;
    for (const auto& alt : rep.alternatives) {
        if (alt == std::vector<std::string>{"C3(3,0)", "C4(4,0)", "C4(3,1)"})
            found_published_triple = true;
    }
    CHECK(found_published_triple);
    // every selected candidate is a subgroup scalar
    for (const auto& id : rep.selected) {
        bool ok = false;
        for (const auto& c : rep.candidates)
            if (c.id == id) ok = c.subgroup_scalar;
        CHECK(ok);
    }
}

TEST_CASE("poisson-only mode marks verdicts as necessary-only") {
    LieAlgebra su22 = build_su22();
    auto res = charpoly_invariants(su22_charpoly_template(), su22_casimir_degrees());
    MLPOptions opts;
    opts.seed = 0;
    opts.exact_commutators = false;
    MLPReport rep = mlp_solve(su22, su22_cartan_chain(), res.invariants, opts);
    CHECK_FALSE(rep.exact);
    for (const auto& e : rep.commutation)
        CHECK(e.verdict == CommutationVerdict::PoissonOnly);
}

TEST_CASE("report json is deterministic for a fixed seed") {
    LieAlgebra su22 = build_su22();
    auto res = charpoly_invariants(su22_charpoly_template(), su22_casimir_degrees());
    MLPOptions opts;
    opts.seed = 42;
    opts.exact_commutators = false;
    MLPReport a = mlp_solve(su22, su22_cartan_chain(), res.invariants, opts);
    MLPReport b = mlp_solve(su22, su22_cartan_chain(), res.invariants, opts);
    CHECK(io::mlp_report_to_json(a).dump() == io::mlp_report_to_json(b).dump());
}

TEST_CASE("degenerate chain needing no labels returns the Casimirs alone") {
    // su(2) with the 1-dimensional subalgebra spanned by X1: n = 0.
    LieAlgebra su2 = build_su2();
    Poly cas(3);
    cas.add_term(Monomial({{0, 2}}), Scalar(1));
    cas.add_term(Monomial({{1, 2}}), Scalar(1));
    cas.add_term(Monomial({{2, 2}}), Scalar(1));
    std::map<uint32_t, Poly> casimirs{{2, cas}};
    MLPOptions opts;
    opts.seed = 0;
    MLPReport rep = mlp_solve(su2, ChainSpec{std::nullopt, 1}, casimirs, opts);
    CHECK(rep.counts.needed == 0);
    CHECK(rep.selected.empty());
    CHECK(rep.final_set.size() == rep.casimirs.size() + rep.sub_casimirs.size());
    for (const auto& e : rep.commutation)
        CHECK(e.verdict != CommutationVerdict::ExactFail);
}

TEST_CASE("starving the pipeline of usable Casimirs reports insufficiency") {
    // only the quadratic Casimir is supplied: its components are never
    // selectable, so three labels cannot be assembled.
    LieAlgebra su22 = build_su22();
    auto res = charpoly_invariants(su22_charpoly_template(), {2});
    MLPOptions opts;
    opts.seed = 0;
    CHECK_THROWS_WITH_AS(
        mlp_solve(su22, su22_cartan_chain(), res.invariants, opts),
        "insufficient candidates; consider higher-degree Casimirs or finer splitting",
        domain_error);
}
