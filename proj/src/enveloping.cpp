#include "casilab/enveloping.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace casilab {

UEElement UEElement::generator(uint32_t dim, uint32_t g) {
    if (g >= dim) throw domain_error("generator index out of range");
    UEElement e{dim, {}};
    e.terms.emplace(Letters(1, static_cast<char>(g)), Scalar(1));
    return e;
}

UEElement& UEElement::operator+=(const UEElement& o) {
    if (dim != o.dim) throw domain_error("enveloping element dimension mismatch");
    for (const auto& [w, c] : o.terms) {
        auto [it, inserted] = terms.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return *this;
}

UEElement& UEElement::operator-=(const UEElement& o) {
    if (dim != o.dim) throw domain_error("enveloping element dimension mismatch");
    for (const auto& [w, c] : o.terms) {
        auto [it, inserted] = terms.emplace(w, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return *this;
}

UEElement UEElement::operator*(const Scalar& c) const {
    UEElement out{dim, {}};
    if (c.is_zero()) return out;
    for (const auto& [w, v] : terms) out.terms.emplace(w, v * c);
    return out;
}

std::vector<std::pair<uint32_t, uint32_t>> UEElement::grouped(const Letters& w) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (char ch : w) {
        uint32_t g = static_cast<uint8_t>(ch);
        if (!out.empty() && out.back().first == g)
            ++out.back().second;
        else
            out.push_back({g, 1});
    }
    return out;
}

Letters UEElement::ungroup(const std::vector<std::pair<uint32_t, uint32_t>>& gw) {
    Letters w;
    for (const auto& [g, e] : gw)
        for (uint32_t k = 0; k < e; ++k) w.push_back(static_cast<char>(g));
    return w;
}

Poly UEElement::symbol() const {
    Poly p(dim);
    if (terms.empty()) return p;
    size_t top = terms.rbegin()->first.size();
    for (auto it = terms.rbegin(); it != terms.rend() && it->first.size() == top; ++it) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [g, e] : grouped(it->first)) entries.push_back({g, e});
        p.add_term(Monomial(std::move(entries)), it->second);
    }
    return p;
}

std::string UEElement::str(const std::vector<std::string>* names) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [w, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (const auto& [g, e] : grouped(w)) {
            os << "*";
            if (names && g < names->size())
                os << (*names)[g];
            else
                os << "X" << g;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

UEContext::UEContext(const LieAlgebra& alg, UEOptions opts) : alg_(&alg), opts_(opts) {
    if (alg.dim() > 255) throw domain_error("enveloping engine supports dim <= 255");
}

void UEContext::add_insert(UETerms& acc, const Letters& sorted, uint8_t g, const Scalar& c) {
    if (sorted.empty() || static_cast<uint8_t>(sorted.back()) <= g) {
        Letters w = sorted;
        w.push_back(static_cast<char>(g));
        auto [it, inserted] = acc.emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
        return;
    }
    const UETerms& res = memo_insert(sorted, g);
    for (const auto& [w, v] : res) {
        auto [it, inserted] = acc.emplace(w, v * c);
        if (!inserted) {
            it->second += v * c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

const UETerms& UEContext::memo_insert(const Letters& sorted, uint8_t g) {
    Letters key = sorted;
    key.push_back(static_cast<char>(g));
    auto hit = insert_memo_.find(key);
    if (hit != insert_memo_.end()) return hit->second;

    // X_w' X_h X_g = (X_w' X_g) X_h + X_w' [X_h, X_g],  h = last letter > g.
    uint8_t h = static_cast<uint8_t>(sorted.back());
    Letters prefix = sorted.substr(0, sorted.size() - 1);

    UETerms swapped;
    add_insert(swapped, prefix, g, Scalar(1));
    UETerms res;
    for (const auto& [w, c] : swapped) add_insert(res, w, h, c);
    for (const auto& [k, c] : alg_->bracket(h, g)) add_insert(res, prefix, static_cast<uint8_t>(k), c);

    cached_terms_ += res.size();
    if (cached_terms_ > opts_.term_ceiling)
        throw capacity_error("straightening cache exceeded the term ceiling of " +
                             std::to_string(opts_.term_ceiling) +
                             "; rerun with a larger term ceiling to resume");
    return insert_memo_.emplace(std::move(key), std::move(res)).first->second;
}

UETerms UEContext::normal_order_letters(const Letters& word) {
    // Start from the longest sorted prefix, then fold in one letter at a
    // time; all the sharing lives in the insertion memo.
    size_t p = 0;
    while (p + 1 < word.size() &&
           static_cast<uint8_t>(word[p]) <= static_cast<uint8_t>(word[p + 1]))
        ++p;
    if (word.size() > 0) ++p;

    UETerms acc;
    acc.emplace(word.substr(0, p), Scalar(1));
    for (size_t i = p; i < word.size(); ++i) {
        UETerms next;
        uint8_t g = static_cast<uint8_t>(word[i]);
        for (const auto& [w, c] : acc) add_insert(next, w, g, c);
        acc = std::move(next);
    }
    return acc;
}

UEElement UEContext::normal_order(const std::vector<uint32_t>& word) {
    Letters letters;
    letters.reserve(word.size());
    for (uint32_t g : word) {
        if (g >= alg_->dim()) throw domain_error("generator index out of range");
        letters.push_back(static_cast<char>(g));
    }
    return UEElement{alg_->dim(), normal_order_letters(letters)};
}

UEElement UEContext::multiply(const UEElement& a, const UEElement& b) {
    if (a.dim != alg_->dim() || b.dim != alg_->dim())
        throw domain_error("enveloping element dimension mismatch");
    if (a.degree() + b.degree() > opts_.max_filtration)
        throw capacity_error("product filtration degree exceeds the cap of " +
                             std::to_string(opts_.max_filtration));
    UEElement out = UEElement::zero(alg_->dim());
    for (const auto& [wa, ca] : a.terms) {
        for (const auto& [wb, cb] : b.terms) {
            UETerms acc;
            acc.emplace(wa, ca * cb);
            for (char ch : wb) {
                UETerms next;
                uint8_t g = static_cast<uint8_t>(ch);
                for (const auto& [w, c] : acc) add_insert(next, w, g, c);
                acc = std::move(next);
            }
            for (const auto& [w, c] : acc) {
                auto it = out.terms.find(w);
                if (it == out.terms.end()) {
                    out.terms.emplace(w, c);
                } else {
                    it->second += c;
                    if (it->second.is_zero()) out.terms.erase(it);
                }
            }
        }
    }
    return out;
}

void UEContext::comm_words(UETerms& acc, const Letters& u, const Letters& v, const Scalar& c) {
    // [u, v] = sum_i u_<i [u_i, v] u_>i,  [x, v] = sum_j v_<j [x, v_j] v_>j.
    for (size_t i = 0; i < u.size(); ++i) {
        for (size_t j = 0; j < v.size(); ++j) {
            auto br = alg_->bracket(static_cast<uint8_t>(u[i]), static_cast<uint8_t>(v[j]));
            if (br.empty()) continue;
            Letters tail = v.substr(j + 1) + u.substr(i + 1);
            Letters head = u.substr(0, i) + v.substr(0, j);
            for (const auto& [k, ck] : br) {
                Letters word = head;
                word.push_back(static_cast<char>(k));
                word += tail;
                UETerms no = normal_order_letters(word);
                Scalar f = c * ck;
                for (const auto& [w, vv] : no) {
                    auto [it, inserted] = acc.emplace(w, vv * f);
                    if (!inserted) {
                        it->second += vv * f;
                        if (it->second.is_zero()) acc.erase(it);
                    }
                }
            }
        }
    }
}

UEElement UEContext::commutator(const UEElement& a, const UEElement& b) {
    if (a.dim != alg_->dim() || b.dim != alg_->dim())
        throw domain_error("enveloping element dimension mismatch");
    if (a.degree() + b.degree() > opts_.max_filtration + 1)
        throw capacity_error("commutator filtration degree exceeds the cap of " +
                             std::to_string(opts_.max_filtration));
    UEElement out = UEElement::zero(alg_->dim());
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) comm_words(out.terms, wa, wb, ca * cb);
    return out;
}

const UETerms& UEContext::sym_monomial(const Monomial& m) {
    auto hit = sym_memo_.find(m);
    if (hit != sym_memo_.end()) return hit->second;

    UETerms res;
    uint32_t deg = m.degree();
    if (deg == 0) {
        res.emplace(Letters(), Scalar(1));
    } else {
        // Sym(m) = sum over letters g of (mult_g / deg) X_g Sym(m / x_g).
        for (const auto& [v, e] : m.entries()) {
            Monomial rest = Monomial::var(v).divide(m);
            const UETerms& sub = sym_monomial(rest);  // std::map nodes are stable
            Scalar weight(static_cast<long>(e), static_cast<long>(deg));
            for (const auto& [w, c] : sub) {
                Letters word;
                word.reserve(w.size() + 1);
                word.push_back(static_cast<char>(v));
                word += w;
                UETerms no = normal_order_letters(word);
                for (const auto& [ww, vv] : no) {
                    Scalar f = vv * c * weight;
                    auto [it, inserted] = res.emplace(ww, f);
                    if (!inserted) {
                        it->second += f;
                        if (it->second.is_zero()) res.erase(it);
                    }
                }
            }
        }
    }
    cached_terms_ += res.size();
    if (cached_terms_ > opts_.term_ceiling)
        throw capacity_error("symmetrization cache exceeded the term ceiling of " +
                             std::to_string(opts_.term_ceiling) +
                             "; rerun with a larger term ceiling to resume");
    return sym_memo_.emplace(m, std::move(res)).first->second;
}

UEElement UEContext::symmetrize(const Poly& p) {
    if (p.dim() != alg_->dim()) throw domain_error("polynomial dimension mismatch");
    UEElement out = UEElement::zero(alg_->dim());
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() > opts_.max_symmetrize_degree)
            throw capacity_error("monomial degree " + std::to_string(m.degree()) +
                                 " exceeds the symmetrization cap of " +
                                 std::to_string(opts_.max_symmetrize_degree));
        const UETerms& s = sym_monomial(m);
        for (const auto& [w, v] : s) {
            auto [it, inserted] = out.terms.emplace(w, v * c);
            if (!inserted) {
                it->second += v * c;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    }
    return out;
}

UEElement parallel_commutator(const LieAlgebra& alg, const UEElement& a, const UEElement& b,
                              unsigned threads, const UEOptions& opts) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::pair<const Letters*, const Scalar*>> awords;
    for (const auto& [w, c] : a.terms) awords.push_back({&w, &c});
    if (threads <= 1 || awords.size() < 2 * threads) {
        UEContext ctx(alg, opts);
        return ctx.commutator(a, b);
    }
    std::vector<UEElement> partial(threads, UEElement::zero(alg.dim()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            UEContext ctx(alg, opts);
            UETerms acc;
            for (size_t i = t; i < awords.size(); i += threads)
                for (const auto& [wb, cb] : b.terms)
                    ctx.comm_words(acc, *awords[i].first, wb, *awords[i].second * cb);
            partial[t].terms = std::move(acc);
        });
    }
    for (auto& th : pool) th.join();
    UEElement out = UEElement::zero(alg.dim());
    for (auto& p : partial) out += p;
    return out;
}

Poly poisson_bracket(const LieAlgebra& alg, const Poly& f, const Poly& g) {
    if (f.dim() != alg.dim() || g.dim() != alg.dim())
        throw domain_error("polynomial dimension mismatch");
    uint32_t n = alg.dim();
    std::vector<Poly> df, dg;
    df.reserve(n);
    dg.reserve(n);
    for (uint32_t v = 0; v < n; ++v) {
        df.push_back(f.partial(v));
        dg.push_back(g.partial(v));
    }
    Poly out(n);
    for (const auto& [ij, row] : alg.table()) {
        auto [i, j] = ij;
        if ((df[i].is_zero() || dg[j].is_zero()) && (df[j].is_zero() || dg[i].is_zero()))
            continue;
        Poly lin(n);
        for (const auto& [k, c] : row) lin.add_term(Monomial::var(k), c);
        Poly left = df[i] * dg[j];
        left -= df[j] * dg[i];
        if (!left.is_zero()) out += lin * left;
    }
    return out;
}

std::vector<std::pair<BiDegree, Poly>> commutator_bidegree_report(UEContext& ctx,
                                                                  const UEElement& a,
                                                                  const UEElement& b,
                                                                  uint32_t sub_dim) {
    UEElement comm = ctx.commutator(a, b);
    std::vector<std::pair<BiDegree, Poly>> out;
    if (comm.is_zero()) return out;
    Poly sym = comm.symbol();
    for (auto& [bd, comp] : sym.bidegree_components(sub_dim)) out.push_back({bd, comp});
    return out;
}

}  // namespace casilab
