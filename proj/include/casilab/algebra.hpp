#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casilab/linalg.hpp"
#include "casilab/poly.hpp"
#include "casilab/scalar.hpp"

namespace casilab {

/// Lie algebra given by structure constants [X_i, X_j] = C_ij^k X_k over
/// Gaussian rationals. Only pairs i < j are stored; antisymmetry is
/// applied on lookup. Values are immutable after construction.
class LieAlgebra {
public:
    LieAlgebra() : dim_(0) {}
    LieAlgebra(uint32_t dim, std::vector<std::string> names);

    uint32_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const std::vector<std::string>& names() const { return names_; }

    /// Sets C_ij^k for i != j (either order); zero coefficients are dropped.
    void set_constant(uint32_t i, uint32_t j, uint32_t k, const Scalar& c);

    /// k -> C_ij^k with the sign for the requested order. Empty when zero.
    std::map<uint32_t, Scalar> bracket(uint32_t i, uint32_t j) const;

    /// The linear polynomial C_ij^k x_k.
    Poly bracket_poly(uint32_t i, uint32_t j) const;

    /// Stored lower-triangular table, (i, j) with i < j.
    const std::map<std::pair<uint32_t, uint32_t>, std::map<uint32_t, Scalar>>& table() const {
        return table_;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    uint32_t dim_;
    std::string name_;
    std::vector<std::string> names_;
    std::map<std::pair<uint32_t, uint32_t>, std::map<uint32_t, Scalar>> table_;
};

/// A reduction chain: an optional basis change (rows give the new basis in
/// terms of the old) and the size s of the leading block spanning the
/// subalgebra. Complement indices s..n-1 span the representation space.
struct ChainSpec {
    std::optional<ScalarMat> basis_change;
    uint32_t sub_dim = 0;
};

struct JacobiViolation {
    uint32_t i, j, k, l;
    Scalar residual;
};

struct JacobiReport {
    bool pass = true;
    std::vector<JacobiViolation> violations;
};

/// Exhaustive exact Jacobi check over all triples.
JacobiReport validate_jacobi(const LieAlgebra& alg);

/// Transforms the structure constants covariantly; throws domain_error on
/// a singular matrix. New generator names may be supplied; rows that pick
/// out a single old generator keep its name by default.
LieAlgebra change_basis(const LieAlgebra& alg, const ScalarMat& m,
                        const std::vector<std::string>* new_names = nullptr);

struct ChainReport {
    bool pass = false;
    uint32_t complement_dim = 0;
    /// ad X_i restricted to the complement, one matrix per subalgebra
    /// generator, rows/cols indexed by complement position.
    std::vector<ScalarMat> adjoint_on_complement;
    std::string violation;
};

/// Verifies that the leading sub_dim generators close (in the chain basis)
/// and reports the induced representation data.
ChainReport check_chain(const LieAlgebra& alg, const ChainSpec& chain);

/// The algebra expressed in the chain basis (identity when no change).
LieAlgebra chain_basis_algebra(const LieAlgebra& alg, const ChainSpec& chain);

/// The subalgebra spanned by the first s generators of an algebra already
/// in the chain basis. Throws if those generators do not close.
LieAlgebra leading_subalgebra(const LieAlgebra& alg, uint32_t s);

}  // namespace casilab
