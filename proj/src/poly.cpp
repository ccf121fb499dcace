#include "casilab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace casilab {

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    size_t out = 0;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].second == 0) continue;
        if (out > 0 && entries_[out - 1].first == entries_[i].first) {
            entries_[out - 1].second += entries_[i].second;
        } else {
            entries_[out++] = entries_[i];
        }
    }
    entries_.resize(out);
}

Monomial Monomial::var(uint32_t v, uint32_t exp) {
    Monomial m;
    if (exp > 0) m.entries_.push_back({v, exp});
    return m;
}

uint32_t Monomial::degree() const {
    uint32_t d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
}

uint32_t Monomial::exponent(uint32_t v) const {
    for (const auto& [w, e] : entries_)
        if (w == v) return e;
    return 0;
}

uint32_t Monomial::max_var() const { return entries_.empty() ? 0 : entries_.back().first; }

uint32_t Monomial::degree_in(uint32_t lo, uint32_t hi) const {
    uint32_t d = 0;
    for (const auto& [v, e] : entries_)
        if (v >= lo && v < hi) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    size_t i = 0, j = 0;
    while (i < entries_.size() && j < o.entries_.size()) {
        if (entries_[i].first == o.entries_[j].first) {
            r.entries_.push_back({entries_[i].first, entries_[i].second + o.entries_[j].second});
            ++i, ++j;
        } else if (entries_[i].first < o.entries_[j].first) {
            r.entries_.push_back(entries_[i++]);
        } else {
            r.entries_.push_back(o.entries_[j++]);
        }
    }
    for (; i < entries_.size(); ++i) r.entries_.push_back(entries_[i]);
    for (; j < o.entries_.size(); ++j) r.entries_.push_back(o.entries_[j]);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    size_t j = 0;
    for (const auto& [v, e] : entries_) {
        while (j < o.entries_.size() && o.entries_[j].first < v) ++j;
        if (j == o.entries_.size() || o.entries_[j].first != v || o.entries_[j].second < e)
            return false;
    }
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    // o / this
    Monomial r;
    size_t i = 0;
    for (const auto& [v, e] : o.entries_) {
        uint32_t sub = 0;
        while (i < entries_.size() && entries_[i].first < v) ++i;
        if (i < entries_.size() && entries_[i].first == v) sub = entries_[i].second;
        if (e > sub) r.entries_.push_back({v, e - sub});
    }
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Lex with x0 > x1 > ...: scan ascending variables; at the first
    // variable whose exponents differ, the smaller exponent sorts first.
    size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
        uint32_t va = a.entries_[i].first, vb = b.entries_[j].first;
        if (va == vb) {
            if (a.entries_[i].second != b.entries_[j].second)
                return a.entries_[i].second < b.entries_[j].second;
            ++i, ++j;
        } else if (va < vb) {
            return false;  // a has positive power on an earlier variable
        } else {
            return true;
        }
    }
    return i == a.entries_.size() && j != b.entries_.size();
}

Poly Poly::constant(uint32_t dim, const Scalar& c) {
    Poly p(dim);
    if (!c.is_zero()) p.terms_.emplace(Monomial(), c);
    return p;
}

Poly Poly::variable(uint32_t dim, uint32_t v) {
    Poly p(dim);
    if (v >= dim) throw domain_error("variable index out of range");
    p.terms_.emplace(Monomial::var(v), Scalar(1));
    return p;
}

uint32_t Poly::total_degree() const {
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

const Scalar* Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(dim_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (dim_ != o.dim_) throw domain_error("polynomial dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (dim_ != o.dim_) throw domain_error("polynomial dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.dim_ != b.dim_) throw domain_error("polynomial dimension mismatch");
    Poly r(a.dim_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::partial(uint32_t v) const {
    if (v >= dim_) throw domain_error("variable index out of range");
    Poly r(dim_);
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.exponent(v);
        if (e == 0) continue;
        Monomial q = Monomial::var(v).divide(m);  // m / v
        r.add_term(q, c * Scalar(static_cast<long>(e)));
    }
    return r;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != dim_) throw domain_error("evaluation point dimension mismatch");
    Scalar total(0);
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (const auto& [var, e] : m.entries())
            for (uint32_t k = 0; k < e; ++k) v *= point[var];
        total += v;
    }
    return total;
}

Poly Poly::substitute_linear(const std::vector<std::vector<Scalar>>& rows) const {
    if (rows.size() != dim_) throw domain_error("substitution matrix dimension mismatch");
    // Linear forms for each variable, built once.
    std::vector<Poly> forms;
    forms.reserve(dim_);
    for (uint32_t v = 0; v < dim_; ++v) {
        Poly f(dim_);
        if (rows[v].size() != dim_) throw domain_error("substitution matrix dimension mismatch");
        for (uint32_t w = 0; w < dim_; ++w) f.add_term(Monomial::var(w), rows[v][w]);
        forms.push_back(std::move(f));
    }
    Poly r(dim_);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(dim_, c);
        for (const auto& [var, e] : m.entries())
            for (uint32_t k = 0; k < e; ++k) t = t * forms[var];
        r += t;
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw domain_error("division by zero polynomial");
    if (dim_ != d.dim_) throw domain_error("polynomial dimension mismatch");
    Poly rem = *this;
    Poly q(dim_);
    const auto& dlead = *d.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        if (!dlead.first.divides(rlead.first)) return std::nullopt;
        Monomial qm = dlead.first.divide(rlead.first);
        Scalar qc = rlead.second / dlead.second;
        q.add_term(qm, qc);
        Poly t(dim_);
        t.add_term(qm, qc);
        rem -= t * d;
    }
    return q;
}

std::map<BiDegree, Poly> Poly::bidegree_components(uint32_t sub_dim) const {
    std::map<BiDegree, Poly> out;
    for (const auto& [m, c] : terms_) {
        BiDegree bd{m.degree_in(0, sub_dim), m.degree_in(sub_dim, dim_)};
        auto it = out.find(bd);
        if (it == out.end()) it = out.emplace(bd, Poly(dim_)).first;
        it->second.add_term(m, c);
    }
    return out;
}

Poly Poly::real_part() const {
    Poly r(dim_);
    for (const auto& [m, c] : terms_)
        if (c.real() != 0) r.terms_.emplace(m, Scalar(c.real()));
    return r;
}

Poly Poly::imag_part() const {
    Poly r(dim_);
    for (const auto& [m, c] : terms_)
        if (c.imag() != 0) r.terms_.emplace(m, Scalar(c.imag()));
    return r;
}

std::string Poly::str(const std::vector<std::string>* names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool negated = false;
        if (c.is_real() && c.real() < 0) {
            negated = true;
            cs = Scalar(mpq_class(-c.real())).str();
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        bool complex_coeff = !c.is_real();
        bool unit = !complex_coeff && cs == "1";
        if (m.is_one()) {
            os << (complex_coeff ? "(" + cs + ")" : cs);
        } else {
            if (complex_coeff)
                os << "(" << cs << ")*";
            else if (!unit)
                os << cs << "*";
            bool firstv = true;
            for (const auto& [v, e] : m.entries()) {
                if (!firstv) os << "*";
                firstv = false;
                if (names && v < names->size())
                    os << (*names)[v];
                else
                    os << "x" << v;
                if (e > 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

}  // namespace casilab
