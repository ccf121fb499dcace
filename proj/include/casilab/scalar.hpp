#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace casilab {

/// Raised on malformed input files or scalar strings. Carries enough
/// context (offending text, offset) to be actionable from the CLI.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a mathematical precondition fails (singular basis change,
/// non-Casimir input, parity violation, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a configurable resource ceiling is hit. The message names
/// the ceiling and the flag that raises it; rerunning with a larger cap
/// resumes the (deterministic) computation.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact Gaussian rational a + b*i. The whole kernel computes in this
/// field; there is no floating point anywhere below the reporting layer.
/// Both parts are kept canonical (reduced, positive denominator) by GMP.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& re) : re_(re), im_(0) {}
    Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    /// Parses "p/q", "p", "p/q+r/s i", "p/q-r/s i", "r/s i", "i", "-i".
    static Scalar parse(const std::string& text);

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return im_ == 0 && re_ == 1; }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order used only for deterministic serialization and pivoting.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    /// Canonical form: "p/q" for real values, "p/q+r/s i" otherwise.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    mpq_class re_;
    mpq_class im_;
};

}  // namespace casilab
