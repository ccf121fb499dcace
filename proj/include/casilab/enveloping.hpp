#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "casilab/algebra.hpp"
#include "casilab/poly.hpp"

namespace casilab {

/// Word of generator letters. Sorted (non-decreasing) words are the PBW
/// basis of the enveloping algebra.
using Letters = std::string;

/// Filtration order: shorter words first, lexicographic within a length.
struct WordOrder {
    bool operator()(const Letters& a, const Letters& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using UETerms = std::map<Letters, Scalar, WordOrder>;

/// Element of the universal enveloping algebra in PBW normal form.
struct UEElement {
    uint32_t dim = 0;
    UETerms terms;

    static UEElement zero(uint32_t dim) { return UEElement{dim, {}}; }
    static UEElement generator(uint32_t dim, uint32_t g);

    bool is_zero() const { return terms.empty(); }
    size_t term_count() const { return terms.size(); }
    /// Filtration degree: length of the longest word (0 for constants).
    uint32_t degree() const { return terms.empty() ? 0 : terms.rbegin()->first.size(); }

    UEElement& operator+=(const UEElement& o);
    UEElement& operator-=(const UEElement& o);
    UEElement operator*(const Scalar& c) const;
    friend bool operator==(const UEElement& a, const UEElement& b) {
        return a.dim == b.dim && a.terms == b.terms;
    }

    /// Exponent-grouped view of a word: [(generator, exponent), ...].
    static std::vector<std::pair<uint32_t, uint32_t>> grouped(const Letters& w);
    static Letters ungroup(const std::vector<std::pair<uint32_t, uint32_t>>& gw);

    /// Top-filtration commutative symbol.
    Poly symbol() const;

    std::string str(const std::vector<std::string>* names = nullptr) const;
};

struct UEOptions {
    uint32_t max_symmetrize_degree = 8;
    uint32_t max_filtration = 32;
    /// Ceiling on words retained across the straightening caches; hitting
    /// it aborts with a capacity_error naming the cap (the computation is
    /// deterministic, so rerunning with a larger cap resumes it).
    size_t term_ceiling = 5000000;
};

/// Straightening engine with a memoized single-letter insertion cache.
/// One context per algebra; results are deterministic and independent of
/// call order. Clone per thread for concurrent work.
class UEContext {
public:
    explicit UEContext(const LieAlgebra& alg, UEOptions opts = {});

    const LieAlgebra& algebra() const { return *alg_; }
    const UEOptions& options() const { return opts_; }

    /// PBW form of an arbitrary product of generators.
    UEElement normal_order(const std::vector<uint32_t>& word);

    UEElement multiply(const UEElement& a, const UEElement& b);
    UEElement commutator(const UEElement& a, const UEElement& b);

    /// Symmetrization map: each monomial becomes the average of all
    /// orderings of its letters, in PBW form. Linear; degree-capped.
    UEElement symmetrize(const Poly& p);

    size_t cached_terms() const { return cached_terms_; }

private:
    UETerms normal_order_letters(const Letters& word);
    void add_insert(UETerms& acc, const Letters& sorted, uint8_t g, const Scalar& c);
    const UETerms& memo_insert(const Letters& sorted, uint8_t g);
    const UETerms& sym_monomial(const Monomial& m);
    void comm_words(UETerms& acc, const Letters& u, const Letters& v, const Scalar& c);

    const LieAlgebra* alg_;
    UEOptions opts_;
    std::unordered_map<Letters, UETerms> insert_memo_;
    std::map<Monomial, UETerms> sym_memo_;
    size_t cached_terms_ = 0;

    friend UEElement parallel_commutator(const LieAlgebra&, const UEElement&, const UEElement&,
                                         unsigned, const UEOptions&);
};

/// Pairwise-sharded commutator for heavy inputs; deterministic for any
/// thread count. threads == 0 picks the hardware concurrency.
UEElement parallel_commutator(const LieAlgebra& alg, const UEElement& a, const UEElement& b,
                              unsigned threads, const UEOptions& opts = {});

/// Lie-Poisson bracket {f,g} = C_ij^k x_k (df/dx_i)(dg/dx_j); the cheap
/// commutative necessary test for commutation of symmetrized operators.
Poly poisson_bracket(const LieAlgebra& alg, const Poly& f, const Poly& g);

/// Bi-degree components of the top symbol of [a, b]; empty for commuting
/// pairs. Each component of a bracket of symmetrized subgroup scalars is
/// again a subgroup scalar.
std::vector<std::pair<BiDegree, Poly>> commutator_bidegree_report(UEContext& ctx,
                                                                  const UEElement& a,
                                                                  const UEElement& b,
                                                                  uint32_t sub_dim);

}  // namespace casilab
