#pragma once

#include <map>
#include <vector>

#include "casilab/algebra.hpp"
#include "casilab/poly.hpp"

namespace casilab {

/// The contraction associated to a chain: brackets inside the subalgebra
/// survive, brackets [sub, complement] keep only their complement part,
/// complement brackets vanish. Input and output are in the chain basis.
LieAlgebra contract(const LieAlgebra& alg, const ChainSpec& chain);

/// Decomposition of a polynomial into bi-homogeneous components relative
/// to a chain split. The component of maximal complement degree is the
/// contracted invariant; the pure-subalgebra component (when present) is
/// a function of the subalgebra's own invariants.
struct Decomposition {
    Poly source;
    uint32_t sub_dim = 0;
    uint32_t max_comp_deg = 0;  // M, the top power of the contraction parameter
    std::map<BiDegree, Poly> components;

    /// Sum of components at comp_deg == M (one piece for homogeneous input).
    Poly contracted_invariant() const;
    /// Pure-subalgebra component, or the zero polynomial if absent.
    Poly phi0() const;
    bool has_phi0() const;
};

/// Splits p (already in the chain basis) by bi-degree.
Decomposition bidegree_split(const Poly& p, uint32_t sub_dim);

/// bidegree_split gated on p being an exact invariant of `alg` (which must
/// be in the chain basis); throws domain_error otherwise.
Decomposition decompose_casimir(const LieAlgebra& alg, uint32_t sub_dim, const Poly& p);

/// Lemma bound on components functionally independent of the Casimirs:
/// q-2 when the pure-subalgebra component is present, else q-1, floored
/// at zero.
uint32_t independence_bound(const Decomposition& d);

/// Missing-label counting data.
struct MLPCounts {
    uint32_t dim_s = 0, n_s = 0;  // dim and invariant count of s
    uint32_t dim_h = 0, n_h = 0;  // dim and invariant count of the subalgebra
    uint32_t l_prime = 0;
    uint32_t needed = 0;           // n
    uint32_t available = 0;        // m = 2n
    uint32_t total_solutions = 0;  // m + N(s) + N(h) - l'
};

/// n = (dim s - N(s) - dim h - N(h))/2 + l'; throws on parity violation
/// or a negative count.
MLPCounts mlp_counts(uint32_t dim_s, uint32_t n_s, uint32_t dim_h, uint32_t n_h,
                     uint32_t l_prime);

/// Number of invariants supported entirely on the subalgebra variables.
uint32_t compute_lprime(const std::vector<Poly>& invariants, uint32_t sub_dim);

}  // namespace casilab
