#include "casilab/algebra.hpp"

#include <sstream>

namespace casilab {

LieAlgebra::LieAlgebra(uint32_t dim, std::vector<std::string> names)
    : dim_(dim), names_(std::move(names)) {
    if (dim_ == 0) throw domain_error("Lie algebra dimension must be positive");
    if (names_.empty()) {
        names_.reserve(dim_);
        for (uint32_t i = 0; i < dim_; ++i) names_.push_back("X" + std::to_string(i));
    }
    if (names_.size() != dim_) throw domain_error("generator name count mismatch");
}

void LieAlgebra::set_constant(uint32_t i, uint32_t j, uint32_t k, const Scalar& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw domain_error("generator index out of range");
    if (i == j) throw domain_error("diagonal bracket entries are identically zero");
    Scalar v = c;
    if (i > j) {
        std::swap(i, j);
        v = -v;
    }
    auto& row = table_[{i, j}];
    auto it = row.find(k);
    if (it == row.end()) {
        if (!v.is_zero()) row.emplace(k, v);
    } else {
        it->second = v;
        if (it->second.is_zero()) row.erase(it);
    }
    if (row.empty()) table_.erase({i, j});
}

std::map<uint32_t, Scalar> LieAlgebra::bracket(uint32_t i, uint32_t j) const {
    std::map<uint32_t, Scalar> out;
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table_.find({i, j});
    if (it == table_.end()) return out;
    out = it->second;
    if (flip)
        for (auto& [k, v] : out) v = -v;
    return out;
}

Poly LieAlgebra::bracket_poly(uint32_t i, uint32_t j) const {
    Poly p(dim_);
    for (const auto& [k, c] : bracket(i, j)) p.add_term(Monomial::var(k), c);
    return p;
}

namespace {

// Adds coeff * [X_a, X_b]'s k-component products into acc: given
// row = C_ab, accumulate sum_m C_ab^m C_mc^l style contractions.
void accumulate_double_bracket(const LieAlgebra& alg, uint32_t a, uint32_t b, uint32_t c,
                               std::map<uint32_t, Scalar>& acc) {
    for (const auto& [m, cab] : alg.bracket(a, b)) {
        for (const auto& [l, cmc] : alg.bracket(m, c)) {
            auto it = acc.find(l);
            if (it == acc.end()) {
                Scalar v = cab * cmc;
                if (!v.is_zero()) acc.emplace(l, v);
            } else {
                it->second += cab * cmc;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
}

}  // namespace

JacobiReport validate_jacobi(const LieAlgebra& alg) {
    JacobiReport report;
    uint32_t n = alg.dim();
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
            for (uint32_t k = j + 1; k < n; ++k) {
                std::map<uint32_t, Scalar> acc;
                accumulate_double_bracket(alg, i, j, k, acc);  // [[i,j],k]
                accumulate_double_bracket(alg, j, k, i, acc);  // [[j,k],i]
                accumulate_double_bracket(alg, k, i, j, acc);  // [[k,i],j]
                for (const auto& [l, residual] : acc) {
                    report.pass = false;
                    report.violations.push_back({i, j, k, l, residual});
                }
            }
        }
    }
    return report;
}

LieAlgebra change_basis(const LieAlgebra& alg, const ScalarMat& m,
                        const std::vector<std::string>* new_names) {
    uint32_t n = alg.dim();
    if (m.rows() != n || m.cols() != n) throw domain_error("basis change dimension mismatch");
    auto inv = m.inverse();
    if (!inv) throw domain_error("non-invertible basis change");

    std::vector<std::string> names;
    if (new_names) {
        names = *new_names;
    } else {
        for (uint32_t a = 0; a < n; ++a) {
            // Keep the old name when the row picks out a single generator
            // with coefficient one.
            int hit = -1;
            bool simple = true;
            for (uint32_t b = 0; b < n && simple; ++b) {
                const Scalar& v = m.at(a, b);
                if (v.is_zero()) continue;
                if (hit >= 0 || !v.is_one())
                    simple = false;
                else
                    hit = static_cast<int>(b);
            }
            if (simple && hit >= 0)
                names.push_back(alg.names()[hit]);
            else
                names.push_back("Y" + std::to_string(a));
        }
    }

    LieAlgebra out(n, names);
    out.set_name(alg.name());
    // C'_ab^f = M_ac M_bd C_cd^e (M^-1)_ef
    for (uint32_t a = 0; a < n; ++a) {
        for (uint32_t b = a + 1; b < n; ++b) {
            std::map<uint32_t, Scalar> acc;  // e -> coefficient
            for (uint32_t c = 0; c < n; ++c) {
                const Scalar& mac = m.at(a, c);
                if (mac.is_zero()) continue;
                for (uint32_t d = 0; d < n; ++d) {
                    const Scalar& mbd = m.at(b, d);
                    if (mbd.is_zero()) continue;
                    for (const auto& [e, cde] : alg.bracket(c, d)) {
                        auto it = acc.find(e);
                        Scalar v = mac * mbd * cde;
                        if (it == acc.end()) {
                            if (!v.is_zero()) acc.emplace(e, v);
                        } else {
                            it->second += v;
                            if (it->second.is_zero()) acc.erase(it);
                        }
                    }
                }
            }
            for (uint32_t f = 0; f < n; ++f) {
                Scalar total(0);
                for (const auto& [e, v] : acc) total += v * inv->at(e, f);
                if (!total.is_zero()) out.set_constant(a, b, f, total);
            }
        }
    }
    return out;
}

ChainReport check_chain(const LieAlgebra& alg, const ChainSpec& chain) {
    ChainReport report;
    uint32_t n = alg.dim();
    uint32_t s = chain.sub_dim;
    if (s == 0 || s >= n) {
        report.violation = "sub_dim must satisfy 0 < s < dim";
        return report;
    }
    LieAlgebra cb = chain_basis_algebra(alg, chain);
    for (uint32_t i = 0; i < s; ++i) {
        for (uint32_t j = i + 1; j < s; ++j) {
            for (const auto& [k, c] : cb.bracket(i, j)) {
                if (k >= s) {
                    std::ostringstream os;
                    os << "subalgebra not closed: [" << cb.names()[i] << ", " << cb.names()[j]
                       << "] has component " << c.str() << " on " << cb.names()[k];
                    report.violation = os.str();
                    return report;
                }
            }
        }
    }
    report.pass = true;
    report.complement_dim = n - s;
    for (uint32_t i = 0; i < s; ++i) {
        ScalarMat ad(n - s, n - s);
        for (uint32_t j = s; j < n; ++j)
            for (const auto& [k, c] : cb.bracket(i, j))
                if (k >= s) ad.at(k - s, j - s) = c;
        report.adjoint_on_complement.push_back(std::move(ad));
    }
    return report;
}

LieAlgebra chain_basis_algebra(const LieAlgebra& alg, const ChainSpec& chain) {
    if (!chain.basis_change) return alg;
    return change_basis(alg, *chain.basis_change);
}

LieAlgebra leading_subalgebra(const LieAlgebra& alg, uint32_t s) {
    if (s == 0 || s > alg.dim()) throw domain_error("invalid subalgebra size");
    std::vector<std::string> names(alg.names().begin(), alg.names().begin() + s);
    LieAlgebra sub(s, names);
    sub.set_name(alg.name() + "_sub");
    for (uint32_t i = 0; i < s; ++i) {
        for (uint32_t j = i + 1; j < s; ++j) {
            for (const auto& [k, c] : alg.bracket(i, j)) {
                if (k >= s)
                    throw domain_error("leading generators do not close to a subalgebra");
                sub.set_constant(i, j, k, c);
            }
        }
    }
    return sub;
}

}  // namespace casilab
