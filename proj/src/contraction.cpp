#include "casilab/contraction.hpp"

#include "casilab/invariants.hpp"

namespace casilab {

LieAlgebra contract(const LieAlgebra& alg, const ChainSpec& chain) {
    ChainReport rep = check_chain(alg, chain);
    if (!rep.pass) throw domain_error("invalid chain: " + rep.violation);
    LieAlgebra cb = chain_basis_algebra(alg, chain);
    uint32_t n = cb.dim();
    uint32_t s = chain.sub_dim;

    LieAlgebra out(n, cb.names());
    out.set_name(cb.name().empty() ? "contraction" : cb.name() + "_contracted");
    for (const auto& [ij, row] : cb.table()) {
        auto [i, j] = ij;
        if (j < s) {
            for (const auto& [k, c] : row) out.set_constant(i, j, k, c);
        } else if (i < s) {
            for (const auto& [k, c] : row)
                if (k >= s) out.set_constant(i, j, k, c);
        }
        // both in the complement: bracket contracts to zero
    }
    return out;
}

Poly Decomposition::contracted_invariant() const {
    Poly out(source.dim());
    for (const auto& [bd, comp] : components)
        if (bd.comp_deg == max_comp_deg) out += comp;
    return out;
}

Poly Decomposition::phi0() const {
    Poly out(source.dim());
    for (const auto& [bd, comp] : components)
        if (bd.comp_deg == 0) out += comp;
    return out;
}

bool Decomposition::has_phi0() const {
    for (const auto& [bd, comp] : components)
        if (bd.comp_deg == 0) return true;
    return false;
}

Decomposition bidegree_split(const Poly& p, uint32_t sub_dim) {
    Decomposition d;
    d.source = p;
    d.sub_dim = sub_dim;
    d.components = p.bidegree_components(sub_dim);
    for (const auto& [bd, comp] : d.components)
        d.max_comp_deg = std::max(d.max_comp_deg, bd.comp_deg);
    return d;
}

Decomposition decompose_casimir(const LieAlgebra& alg, uint32_t sub_dim, const Poly& p) {
    if (!is_invariant(alg, p)) throw domain_error("input is not a Casimir function");
    return bidegree_split(p, sub_dim);
}

uint32_t independence_bound(const Decomposition& d) {
    uint32_t q = static_cast<uint32_t>(d.components.size());
    uint32_t drop = d.has_phi0() ? 2 : 1;
    return q > drop ? q - drop : 0;
}

MLPCounts mlp_counts(uint32_t dim_s, uint32_t n_s, uint32_t dim_h, uint32_t n_h,
                     uint32_t l_prime) {
    long raw = static_cast<long>(dim_s) - static_cast<long>(n_s) - static_cast<long>(dim_h) -
               static_cast<long>(n_h);
    if (raw % 2 != 0) throw domain_error("parity violation in label count");
    long needed = raw / 2 + static_cast<long>(l_prime);
    if (needed < 0) throw domain_error("negative label count");
    MLPCounts c;
    c.dim_s = dim_s;
    c.n_s = n_s;
    c.dim_h = dim_h;
    c.n_h = n_h;
    c.l_prime = l_prime;
    c.needed = static_cast<uint32_t>(needed);
    c.available = 2 * c.needed;
    c.total_solutions = c.available + n_s + n_h - l_prime;
    return c;
}

uint32_t compute_lprime(const std::vector<Poly>& invariants, uint32_t sub_dim) {
    uint32_t count = 0;
    for (const auto& p : invariants) {
        if (p.is_zero()) continue;
        bool inside = true;
        for (const auto& [m, c] : p.terms()) {
            if (m.degree_in(sub_dim, p.dim()) > 0) {
                inside = false;
                break;
            }
        }
        if (inside) ++count;
    }
    return count;
}

}  // namespace casilab
