#include "casilab/mlp.hpp"

#include <algorithm>
#include <sstream>

namespace casilab {

namespace {

// Jacobian matrix of the family at a point, rows = polynomials.
ScalarMat jacobian_at(const std::vector<Poly>& polys, uint32_t nvars,
                      const std::vector<Scalar>& point) {
    ScalarMat j(polys.size(), nvars);
    for (size_t r = 0; r < polys.size(); ++r)
        for (uint32_t v = 0; v < nvars; ++v) j.at(r, v) = polys[r].partial(v).eval(point);
    return j;
}

}  // namespace

JacobianCertificate jacobian_independent(const std::vector<Poly>& polys, uint32_t nvars,
                                         uint64_t seed, uint32_t retries, long bound) {
    JacobianCertificate cert;
    cert.seed = seed;
    size_t r = polys.size();
    if (r == 0) {
        cert.independent = true;
        cert.minor_value = Scalar(1);
        return cert;
    }
    if (r > nvars) return cert;
    PointSampler sampler(seed, bound);
    for (uint32_t attempt = 0; attempt < retries; ++attempt) {
        std::vector<Scalar> point = sampler.point(nvars);
        ScalarMat j = jacobian_at(polys, nvars, point);
        // Column-pivoted elimination; pivot columns witness the minor.
        std::vector<uint32_t> pivot_cols;
        size_t rank = 0;
        ScalarMat m = j;
        for (uint32_t col = 0; col < nvars && rank < r; ++col) {
            size_t p = rank;
            while (p < r && m.at(p, col).is_zero()) ++p;
            if (p == r) continue;
            if (p != rank)
                for (uint32_t c = 0; c < nvars; ++c) std::swap(m.at(p, c), m.at(rank, c));
            for (size_t i = rank + 1; i < r; ++i) {
                if (m.at(i, col).is_zero()) continue;
                Scalar f = m.at(i, col) / m.at(rank, col);
                for (uint32_t c = col; c < nvars; ++c) m.at(i, c) -= f * m.at(rank, c);
            }
            pivot_cols.push_back(col);
            ++rank;
        }
        if (rank == r) {
            ScalarMat minor(r, r);
            for (size_t i = 0; i < r; ++i)
                for (size_t c = 0; c < r; ++c) minor.at(i, c) = j.at(i, pivot_cols[c]);
            Scalar det = minor.det();
            if (!det.is_zero()) {
                cert.independent = true;
                cert.variable_subset = pivot_cols;
                cert.point = point;
                cert.minor_value = det;
                cert.retries_used = attempt + 1;
                return cert;
            }
        }
        cert.retries_used = attempt + 1;
    }
    return cert;
}

std::vector<const Candidate*> select_candidates(const std::vector<Candidate>& candidates,
                                                uint32_t needed,
                                                const std::vector<Poly>& casimir_context,
                                                uint32_t nvars, uint64_t seed) {
    std::vector<const Candidate*> order;
    for (const auto& c : candidates)
        if (c.selectable) order.push_back(&c);
    std::sort(order.begin(), order.end(), [](const Candidate* a, const Candidate* b) {
        uint32_t ta = a->bidegree.sub_deg + a->bidegree.comp_deg;
        uint32_t tb = b->bidegree.sub_deg + b->bidegree.comp_deg;
        if (ta != tb) return ta < tb;
        if (a->bidegree.comp_deg != b->bidegree.comp_deg)
            return a->bidegree.comp_deg < b->bidegree.comp_deg;
        // Graded-lex on the leading monomial, then id for stability.
        if (!a->component.is_zero() && !b->component.is_zero()) {
            const Monomial& ma = a->component.terms().rbegin()->first;
            const Monomial& mb = b->component.terms().rbegin()->first;
            if (ma != mb) return ma < mb;
        }
        return a->id < b->id;
    });

    std::vector<const Candidate*> chosen;
    std::vector<Poly> family = casimir_context;
    for (const Candidate* c : order) {
        if (chosen.size() == needed) break;
        family.push_back(c->component);
        if (jacobian_independent(family, nvars, seed).independent)
            chosen.push_back(c);
        else
            family.pop_back();
    }
    return chosen;
}

namespace {

Poly widen(const Poly& p, uint32_t dim) {
    Poly out(dim);
    for (const auto& [m, c] : p.terms()) out.add_term(m, c);
    return out;
}

std::string paper_style_label(const std::string& source, const BiDegree& bd) {
    std::ostringstream os;
    os << source << "(" << bd.comp_deg << "," << bd.sub_deg << ")";
    return os.str();
}

struct Operator {
    std::string id;
    const Poly* poly;
    enum Kind { CasimirS, CasimirSub, Labelling } kind;
    UEElement sym;
};

}  // namespace

MLPReport mlp_solve(const LieAlgebra& alg, const ChainSpec& chain,
                    const std::map<uint32_t, Poly>& casimirs_original_basis,
                    const MLPOptions& opts) {
    MLPReport report;
    report.seed = opts.seed;
    report.exact = opts.exact_commutators;

    ChainReport chain_rep = check_chain(alg, chain);
    if (!chain_rep.pass) throw domain_error("invalid chain: " + chain_rep.violation);
    LieAlgebra cb = chain_basis_algebra(alg, chain);
    uint32_t n = cb.dim();
    uint32_t s = chain.sub_dim;

    // Casimirs in the chain basis.
    std::vector<std::vector<Scalar>> subst;
    if (chain.basis_change) {
        auto inv = chain.basis_change->inverse();
        if (!inv) throw domain_error("non-invertible basis change");
        subst.assign(n, std::vector<Scalar>(n));
        for (uint32_t r = 0; r < n; ++r)
            for (uint32_t c = 0; c < n; ++c) subst[r][c] = inv->at(r, c);
    }
    for (const auto& [deg, p] : casimirs_original_basis) {
        Poly q = chain.basis_change ? p.substitute_linear(subst) : p;
        report.casimirs.push_back({"C" + std::to_string(deg), std::move(q)});
    }

    // Counting data.
    LieAlgebra sub = leading_subalgebra(cb, s);
    uint32_t n_s = count_invariants(cb, opts.seed, opts.count_retries);
    uint32_t n_h = count_invariants(sub, opts.seed, opts.count_retries);
    LieAlgebra contracted = contract(alg, chain);
    report.n_contracted = count_invariants(contracted, opts.seed, opts.count_retries);
    std::vector<Poly> casimir_polys;
    for (const auto& [id, p] : report.casimirs) casimir_polys.push_back(p);
    uint32_t l_prime = compute_lprime(casimir_polys, s);
    report.counts = mlp_counts(n, n_s, s, n_h, l_prime);

    // Fundamental invariants of the subalgebra, lowest degrees first.
    {
        std::vector<Poly> found;
        for (uint32_t d = 1; d <= opts.max_degree && found.size() < n_h; ++d) {
            for (const Poly& cand : solve_invariants_degree(sub, d)) {
                if (found.size() == n_h) break;
                std::vector<Poly> family = found;
                family.push_back(cand);
                if (jacobian_independent(family, s, opts.seed).independent)
                    found.push_back(cand);
            }
        }
        if (found.size() < n_h)
            report.notes.push_back("only " + std::to_string(found.size()) + " of " +
                                   std::to_string(n_h) +
                                   " subalgebra invariants found up to degree " +
                                   std::to_string(opts.max_degree));
        for (size_t i = 0; i < found.size(); ++i)
            report.sub_casimirs.push_back(
                {"D" + std::to_string(i + 1), widen(found[i], n)});
    }

    // Decompose every Casimir; only degree >= 3 components are candidates.
    for (const auto& [id, p] : report.casimirs) {
        Decomposition d = decompose_casimir(cb, s, p);
        for (const auto& [bd, comp] : d.components) {
            Candidate c;
            c.id = paper_style_label(id, bd);
            c.source = id;
            c.bidegree = bd;
            c.component = comp;
            c.term_count = comp.term_count();
            c.subgroup_scalar = is_subgroup_scalar(cb, s, comp);
            c.selectable =
                c.subgroup_scalar && bd.comp_deg > 0 && bd.sub_deg + bd.comp_deg >= 3;
            report.candidates.push_back(std::move(c));
        }
    }

    // Trivial complement directions are labelling operators the pipeline
    // does not generate; flag them (see the chain report adjoints).
    for (uint32_t j = 0; j < n - s; ++j) {
        bool trivial = true;
        for (uint32_t i = 0; i < s && trivial; ++i)
            for (uint32_t k = 0; k < n - s && trivial; ++k)
                if (!chain_rep.adjoint_on_complement[i].at(k, j).is_zero()) trivial = false;
        if (trivial)
            report.notes.push_back("complement generator " + cb.names()[s + j] +
                                   " spans a trivial subalgebra module and is itself a "
                                   "labelling operator not obtained from contraction");
    }

    // Step 3: extract `needed` functionally independent candidates.
    std::vector<Poly> context = casimir_polys;
    for (const auto& [id, p] : report.sub_casimirs) context.push_back(p);
    std::vector<const Candidate*> chosen =
        select_candidates(report.candidates, report.counts.needed, context, n, opts.seed);
    if (chosen.size() < report.counts.needed)
        throw domain_error(
            "insufficient candidates; consider higher-degree Casimirs or finer splitting");

    // Commutation phase over the final family.
    std::vector<Operator> ops;
    for (const auto& [id, p] : report.casimirs)
        ops.push_back({id, &p, Operator::CasimirS, UEElement::zero(n)});
    for (const auto& [id, p] : report.sub_casimirs)
        ops.push_back({id, &p, Operator::CasimirSub, UEElement::zero(n)});
    for (const Candidate* c : chosen)
        ops.push_back({c->id, &c->component, Operator::Labelling, UEElement::zero(n)});

    UEContext ue(cb, opts.ue);
    std::vector<bool> central(ops.size(), false);
    std::vector<bool> sub_commuting(ops.size(), false);
    if (opts.exact_commutators) {
        for (size_t i = 0; i < ops.size(); ++i) {
            ops[i].sym = ue.symmetrize(*ops[i].poly);
            // Exact generator commutators give blanket certificates:
            // vanishing against all generators (centre) or against the
            // subalgebra generators (commutes with everything in U(s')).
            bool cen = true;
            for (uint32_t g = 0; g < n && cen; ++g)
                cen = ue.commutator(UEElement::generator(n, g), ops[i].sym).is_zero();
            central[i] = cen;
            if (!cen) {
                bool subc = true;
                for (uint32_t g = 0; g < s && subc; ++g)
                    subc = ue.commutator(UEElement::generator(n, g), ops[i].sym).is_zero();
                sub_commuting[i] = subc;
            } else {
                sub_commuting[i] = true;
            }
        }
    }

    // Poisson verdicts are reused between the commutation matrix and the
    // alternatives screen; brackets on the big components are not cheap.
    std::map<std::pair<std::string, std::string>, bool> poisson_cache;
    auto poisson_zero = [&](const std::string& ida, const Poly& pa, const std::string& idb,
                            const Poly& pb) {
        auto key = ida < idb ? std::make_pair(ida, idb) : std::make_pair(idb, ida);
        auto it = poisson_cache.find(key);
        if (it != poisson_cache.end()) return it->second;
        bool zero = poisson_bracket(cb, pa, pb).is_zero();
        poisson_cache.emplace(key, zero);
        return zero;
    };

    bool all_zero = true;
    for (size_t i = 0; i < ops.size(); ++i) {
        for (size_t j = i + 1; j < ops.size(); ++j) {
            CommutationEntry entry{ops[i].id, ops[j].id, CommutationVerdict::PoissonOnly, 0};
            if (!poisson_zero(ops[i].id, *ops[i].poly, ops[j].id, *ops[j].poly)) {
                entry.verdict = CommutationVerdict::PoissonFail;
                all_zero = false;
            } else if (!opts.exact_commutators) {
                entry.verdict = CommutationVerdict::PoissonOnly;
            } else if (central[i] || central[j]) {
                entry.verdict = CommutationVerdict::ExactCentral;
            } else if ((sub_commuting[i] && ops[j].kind == Operator::CasimirSub) ||
                       (sub_commuting[j] && ops[i].kind == Operator::CasimirSub)) {
                entry.verdict = CommutationVerdict::ExactViaSubalgebra;
            } else {
                UEElement comm = opts.threads > 1
                                     ? parallel_commutator(cb, ops[i].sym, ops[j].sym,
                                                           opts.threads, opts.ue)
                                     : ue.commutator(ops[i].sym, ops[j].sym);
                if (comm.is_zero()) {
                    entry.verdict = CommutationVerdict::ExactZero;
                } else {
                    entry.verdict = CommutationVerdict::ExactFail;
                    entry.commutator_terms = comm.term_count();
                    all_zero = false;
                }
            }
            report.commutation.push_back(std::move(entry));
        }
    }
    if (!all_zero)
        throw domain_error(
            "selected candidates do not pairwise commute; consider higher-degree Casimirs or "
            "finer splitting");

    for (const Candidate* c : chosen) report.selected.push_back(c->id);
    for (const auto& op : ops) report.final_set.push_back(op.id);

    // Other independent subsets whose pairwise Poisson brackets vanish;
    // screened candidates only, no exact claims made for these.
    {
        std::vector<const Candidate*> pool;
        for (const auto& c : report.candidates)
            if (c.selectable) pool.push_back(&c);
        uint32_t k = report.counts.needed;
        std::vector<uint32_t> idx(k);
        auto next_combo = [&](std::vector<uint32_t>& v) {
            size_t i = v.size();
            while (i > 0) {
                --i;
                if (v[i] + (v.size() - i) < pool.size() + 0u) {
                    ++v[i];
                    for (size_t j = i + 1; j < v.size(); ++j) v[j] = v[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        if (k > 0 && pool.size() >= k) {
            for (uint32_t i = 0; i < k; ++i) idx[i] = i;
            do {
                std::vector<std::string> ids;
                std::vector<Poly> family = context;
                for (uint32_t i : idx) {
                    ids.push_back(pool[i]->id);
                    family.push_back(pool[i]->component);
                }
                if (ids == report.selected) continue;
                bool poisson_ok = true;
                for (uint32_t a = 0; a < k && poisson_ok; ++a)
                    for (uint32_t b = a + 1; b < k && poisson_ok; ++b)
                        poisson_ok = poisson_zero(pool[idx[a]]->id, pool[idx[a]]->component,
                                                  pool[idx[b]]->id, pool[idx[b]]->component);
                if (poisson_ok && jacobian_independent(family, n, opts.seed).independent)
                    report.alternatives.push_back(std::move(ids));
            } while (report.alternatives.size() < 5 && next_combo(idx));
        }
    }

    // Independence certificate for the whole family.
    std::vector<Poly> family;
    for (const auto& op : ops) family.push_back(*op.poly);
    report.independence = jacobian_independent(family, n, opts.seed);
    if (!report.independence.independent)
        report.notes.push_back("final family failed the probabilistic independence test");
    return report;
}

}  // namespace casilab
