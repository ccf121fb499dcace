#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casilab/scalar.hpp"

namespace casilab {

/// Sparse exponent vector. Entries are (variable, exponent) with exponent
/// >= 1, sorted by variable index. The empty monomial is 1.
class Monomial {
public:
    using Entry = std::pair<uint32_t, uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);
    static Monomial var(uint32_t v, uint32_t exp = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    uint32_t degree() const;
    uint32_t exponent(uint32_t v) const;
    uint32_t max_var() const;  // 0 when empty; callers check is_one() first

    /// Degree in the variable range [lo, hi).
    uint32_t degree_in(uint32_t lo, uint32_t hi) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // o / this, requires divides

    /// Graded lexicographic order: lower total degree first; ties broken
    /// lexicographically with x0 > x1 > ... (higher power of an earlier
    /// variable sorts later, i.e. larger).
    friend bool operator<(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<Entry> entries_;
};

/// Bi-degree of a monomial relative to a chain split at sub_dim: degree in
/// the subalgebra variables first, complement degree second.
struct BiDegree {
    uint32_t sub_deg = 0;
    uint32_t comp_deg = 0;

    friend bool operator<(const BiDegree& a, const BiDegree& b) {
        if (a.sub_deg != b.sub_deg) return a.sub_deg < b.sub_deg;
        return a.comp_deg < b.comp_deg;
    }
    friend bool operator==(const BiDegree& a, const BiDegree& b) {
        return a.sub_deg == b.sub_deg && a.comp_deg == b.comp_deg;
    }
};

/// Sparse multivariate polynomial over Gaussian rationals in a fixed
/// number of commuting variables. Terms are kept in graded-lex order with
/// no zero coefficients, so equal polynomials compare equal term by term.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar>;

    Poly() : dim_(0) {}
    explicit Poly(uint32_t dim) : dim_(dim) {}

    static Poly zero(uint32_t dim) { return Poly(dim); }
    static Poly constant(uint32_t dim, const Scalar& c);
    static Poly variable(uint32_t dim, uint32_t v);

    uint32_t dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    uint32_t total_degree() const;  // 0 for the zero polynomial

    const Scalar* coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Scalar& c);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly partial(uint32_t v) const;
    Scalar eval(const std::vector<Scalar>& point) const;

    /// Substitution x_v -> linear form given by row v of `rows` (an n x n
    /// matrix of scalars over the same variable set).
    Poly substitute_linear(const std::vector<std::vector<Scalar>>& rows) const;

    /// Exact quotient, or nullopt if `this` is not divisible by d.
    std::optional<Poly> divide_exact(const Poly& d) const;

    /// Component polynomials keyed by bi-degree w.r.t. a split at sub_dim.
    std::map<BiDegree, Poly> bidegree_components(uint32_t sub_dim) const;

    /// Real and imaginary parts (coefficient-wise).
    Poly real_part() const;
    Poly imag_part() const;

    /// Canonical rendering, highest terms first. Variables print as x0,
    /// x1, ... unless names are supplied.
    std::string str(const std::vector<std::string>* names = nullptr) const;

private:
    uint32_t dim_;
    TermMap terms_;
};

}  // namespace casilab
