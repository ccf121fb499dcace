#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "casilab/algebra.hpp"
#include "casilab/invariants_types.hpp"
#include "casilab/linalg.hpp"
#include "casilab/poly.hpp"

namespace casilab {

/// Deterministic integer sampler on {-bound..bound} \ {0}. Backed by
/// mt19937_64, whose output sequence is fully specified, so identical
/// seeds give identical points on every platform.
class PointSampler {
public:
    explicit PointSampler(uint64_t seed, long bound = 100);
    Scalar next();
    std::vector<Scalar> point(uint32_t dim);

private:
    std::mt19937_64 eng_;
    long bound_;
};

/// The coadjoint vector field of generator i applied to p:
/// sum_{j,k} C_ij^k x_k dp/dx_j.
Poly apply_generator(const LieAlgebra& alg, uint32_t i, const Poly& p);

/// True iff apply_generator(alg, i, p) vanishes for every generator.
bool is_invariant(const LieAlgebra& alg, const Poly& p);

/// True iff the first sub_dim vector fields annihilate p (p in the chain
/// basis).
bool is_subgroup_scalar(const LieAlgebra& alg, uint32_t sub_dim, const Poly& p);

/// Number of independent invariants: dim - max rank of [C_ij^k x_k] over
/// `retries` sampled points. Deterministic given the seed.
uint32_t count_invariants(const LieAlgebra& alg, uint64_t seed, uint32_t retries = 5,
                          long bound = 100);

/// i = (dim - N)/2; throws domain_error on parity violation.
uint32_t internal_label_count(uint32_t dim, uint32_t n_invariants);

/// f = (dim - 3*rank)/2; throws domain_error on parity violation.
uint32_t racah_number(uint32_t dim, uint32_t rank);

struct DegreeSolverOptions {
    size_t max_monomials = 200000;
};

/// Basis of the homogeneous degree-d polynomial solutions of the full
/// PDE system, via an exact nullspace over the monomial basis.
std::vector<Poly> solve_invariants_degree(const LieAlgebra& alg, uint32_t degree,
                                          const DegreeSolverOptions& opts = {});

/// All monomials of the given total degree, in ascending graded-lex order.
std::vector<Monomial> monomial_basis(uint32_t dim, uint32_t degree);

struct CharpolyResult {
    /// Casimir candidates keyed by polynomial degree.
    std::map<uint32_t, Poly> invariants;
    /// Degrees whose coefficient polynomial had a nonzero imaginary part;
    /// those are reported, never silently altered.
    std::vector<uint32_t> nonreal_degrees;
};

/// Coefficients of |template - T Id| as polynomials in the algebra
/// variables, keyed by their degree, restricted to `degrees`. The
/// determinant is expanded fraction-free (Bareiss) over the polynomial
/// ring. Throws domain_error if a requested coefficient vanishes.
CharpolyResult charpoly_invariants(const MatrixTemplate& tmpl,
                                   const std::vector<uint32_t>& degrees);

/// Fraction-free determinant of a square polynomial matrix.
Poly poly_det(std::vector<std::vector<Poly>> m, uint32_t dim);

/// True iff p lies in the exact linear span of the basis polynomials.
bool in_linear_span(const std::vector<Poly>& basis, const Poly& p);

}  // namespace casilab
