#include "casilab/invariants.hpp"

#include <algorithm>
#include <random>

namespace casilab {

PointSampler::PointSampler(uint64_t seed, long bound) : eng_(seed), bound_(bound) {}

Scalar PointSampler::next() {
    // {-bound..bound} \ {0}
    unsigned long span = static_cast<unsigned long>(2 * bound_);
    long v = static_cast<long>(eng_() % span) - bound_;
    if (v >= 0) ++v;
    return Scalar(v);
}

std::vector<Scalar> PointSampler::point(uint32_t dim) {
    std::vector<Scalar> p;
    p.reserve(dim);
    for (uint32_t i = 0; i < dim; ++i) p.push_back(next());
    return p;
}

Poly apply_generator(const LieAlgebra& alg, uint32_t i, const Poly& p) {
    if (i >= alg.dim()) throw domain_error("generator index out of range");
    if (p.dim() != alg.dim()) throw domain_error("polynomial dimension mismatch");
    Poly out(p.dim());
    for (uint32_t j = 0; j < alg.dim(); ++j) {
        if (j == i) continue;
        Poly lin = alg.bracket_poly(i, j);
        if (lin.is_zero()) continue;
        Poly dp = p.partial(j);
        if (dp.is_zero()) continue;
        out += lin * dp;
    }
    return out;
}

bool is_invariant(const LieAlgebra& alg, const Poly& p) {
    for (uint32_t i = 0; i < alg.dim(); ++i)
        if (!apply_generator(alg, i, p).is_zero()) return false;
    return true;
}

bool is_subgroup_scalar(const LieAlgebra& alg, uint32_t sub_dim, const Poly& p) {
    if (sub_dim > alg.dim()) throw domain_error("sub_dim out of range");
    for (uint32_t i = 0; i < sub_dim; ++i)
        if (!apply_generator(alg, i, p).is_zero()) return false;
    return true;
}

uint32_t count_invariants(const LieAlgebra& alg, uint64_t seed, uint32_t retries, long bound) {
    if (retries < 1) throw domain_error("retries must be >= 1");
    uint32_t n = alg.dim();
    PointSampler sampler(seed, bound);
    size_t best = 0;
    for (uint32_t t = 0; t < retries; ++t) {
        std::vector<Scalar> pt = sampler.point(n);
        ScalarMat m(n, n);
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t j = i + 1; j < n; ++j) {
                Scalar v(0);
                for (const auto& [k, c] : alg.bracket(i, j)) v += c * pt[k];
                m.at(i, j) = v;
                m.at(j, i) = -v;
            }
        }
        best = std::max(best, m.rank());
    }
    return n - static_cast<uint32_t>(best);
}

uint32_t internal_label_count(uint32_t dim, uint32_t n_invariants) {
    if (n_invariants > dim) throw domain_error("invariant count exceeds dimension");
    uint32_t diff = dim - n_invariants;
    if (diff % 2 != 0)
        throw domain_error("non-integer label count (dim - N odd); re-run with more retries");
    return diff / 2;
}

uint32_t racah_number(uint32_t dim, uint32_t rank) {
    if (3 * rank > dim) throw domain_error("rank too large for Racah number");
    uint32_t diff = dim - 3 * rank;
    if (diff % 2 != 0) throw domain_error("non-integer Racah number (dim - 3l odd)");
    return diff / 2;
}

std::vector<Monomial> monomial_basis(uint32_t dim, uint32_t degree) {
    std::vector<Monomial> out;
    std::vector<Monomial::Entry> current;
    // Enumerate exponent vectors recursively; ordering fixed afterwards.
    auto rec = [&](auto&& self, uint32_t var, uint32_t remaining) -> void {
        if (var + 1 == dim) {
            auto entries = current;
            if (remaining > 0) entries.push_back({var, remaining});
            out.push_back(Monomial(std::move(entries)));
            return;
        }
        for (uint32_t e = 0; e <= remaining; ++e) {
            if (e > 0) current.push_back({var, e});
            self(self, var + 1, remaining - e);
            if (e > 0) current.pop_back();
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Poly> solve_invariants_degree(const LieAlgebra& alg, uint32_t degree,
                                          const DegreeSolverOptions& opts) {
    if (degree < 1) throw domain_error("degree must be >= 1");
    uint32_t n = alg.dim();
    std::vector<Monomial> basis = monomial_basis(n, degree);
    if (basis.size() > opts.max_monomials)
        throw capacity_error("monomial basis of size " + std::to_string(basis.size()) +
                             " exceeds the cap of " + std::to_string(opts.max_monomials) +
                             "; raise max_monomials to proceed");
    std::map<Monomial, uint32_t> col_of;
    for (uint32_t c = 0; c < basis.size(); ++c) col_of.emplace(basis[c], c);

    SparseRref rref(static_cast<uint32_t>(basis.size()));
    for (uint32_t i = 0; i < n && rref.rank() < basis.size(); ++i) {
        // Rows of the equation block for generator i, keyed by the image
        // monomial: row[m_out][col(m_in)] = coeff of m_out in Xhat_i(m_in).
        std::map<Monomial, SparseRref::Row> rows;
        for (uint32_t c = 0; c < basis.size(); ++c) {
            Poly p(n);
            p.add_term(basis[c], Scalar(1));
            Poly image = apply_generator(alg, i, p);
            for (const auto& [m, coeff] : image.terms()) rows[m][c] = coeff;
        }
        for (auto& [m, row] : rows) rref.add_row(std::move(row));
    }

    std::vector<Poly> out;
    for (const auto& vec : rref.nullspace()) {
        Poly p(n);
        for (uint32_t c = 0; c < basis.size(); ++c)
            if (!vec[c].is_zero()) p.add_term(basis[c], vec[c]);
        out.push_back(std::move(p));
    }
    return out;
}

Poly poly_det(std::vector<std::vector<Poly>> m, uint32_t dim) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw domain_error("determinant of non-square matrix");
    if (n == 0) return Poly::constant(dim, Scalar(1));

    int sign = 1;
    Poly prev = Poly::constant(dim, Scalar(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly::zero(dim);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = num.divide_exact(prev);
                if (!q)
                    throw domain_error("internal: fraction-free elimination division failed");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Poly::zero(dim);
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

CharpolyResult charpoly_invariants(const MatrixTemplate& tmpl,
                                   const std::vector<uint32_t>& degrees) {
    uint32_t n = tmpl.size;
    uint32_t ext = tmpl.dim + 1;  // last variable is the charpoly parameter
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(ext)));
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c) {
            const Poly& src = tmpl.entries[r][c];
            if (src.dim() != tmpl.dim) throw domain_error("template entry dimension mismatch");
            Poly dst(ext);
            for (const auto& [mono, coeff] : src.terms()) dst.add_term(mono, coeff);
            if (r == c) dst -= Poly::variable(ext, ext - 1);
            m[r][c] = std::move(dst);
        }
    }
    Poly det = poly_det(std::move(m), ext);

    // Collect coefficients by the power of the parameter variable.
    std::map<uint32_t, Poly> by_power;
    for (const auto& [mono, coeff] : det.terms()) {
        uint32_t tpow = mono.exponent(ext - 1);
        Monomial rest = Monomial::var(ext - 1, tpow).divide(mono);
        std::vector<Monomial::Entry> entries = rest.entries();
        auto it = by_power.find(tpow);
        if (it == by_power.end()) it = by_power.emplace(tpow, Poly(tmpl.dim)).first;
        it->second.add_term(Monomial(std::move(entries)), coeff);
    }

    // Normalize so the leading coefficient of the parameter is +1.
    Scalar lead(1);
    if (auto it = by_power.find(n); it != by_power.end()) {
        const Poly& top = it->second;
        if (top.term_count() == 1 && top.terms().begin()->first.is_one())
            lead = top.terms().begin()->second;
    }

    CharpolyResult result;
    for (uint32_t d : degrees) {
        if (d > n) throw domain_error("requested coefficient degree exceeds matrix size");
        auto it = by_power.find(n - d);
        if (it == by_power.end() || it->second.is_zero())
            throw domain_error("characteristic polynomial has no coefficient of degree " +
                               std::to_string(d));
        Poly c = it->second;
        c *= Scalar(1) / lead;
        if (!c.imag_part().is_zero()) result.nonreal_degrees.push_back(d);
        result.invariants.emplace(d, std::move(c));
    }
    return result;
}

bool in_linear_span(const std::vector<Poly>& basis, const Poly& p) {
    // Columns indexed by monomials appearing anywhere.
    std::map<Monomial, uint32_t> cols;
    auto intern = [&](const Poly& q) {
        for (const auto& [m, c] : q.terms())
            if (!cols.count(m)) cols.emplace(m, static_cast<uint32_t>(cols.size()));
    };
    for (const auto& b : basis) intern(b);
    intern(p);
    SparseRref rref(static_cast<uint32_t>(cols.size()));
    for (const auto& b : basis) {
        SparseRref::Row row;
        for (const auto& [m, c] : b.terms()) row[cols[m]] = c;
        rref.add_row(std::move(row));
    }
    SparseRref::Row target;
    for (const auto& [m, c] : p.terms()) target[cols[m]] = c;
    return rref.reduce(std::move(target)).empty();
}

}  // namespace casilab
