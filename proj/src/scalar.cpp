#include "casilab/scalar.hpp"

#include <cctype>
#include <ostream>

namespace casilab {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw domain_error("rational with zero denominator");
    re_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw domain_error("division by zero scalar");
    mpq_class n2 = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n2;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

namespace {

// Parses a signed rational "p", "-p", "p/q" starting at pos. Advances pos.
mpq_class parse_rational(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits)
        throw parse_error("expected digits at offset " + std::to_string(start) +
                          " in scalar \"" + s + "\"");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den)
            throw parse_error("expected denominator digits at offset " + std::to_string(den) +
                              " in scalar \"" + s + "\"");
    }
    size_t from = s[start] == '+' ? start + 1 : start;  // set_str rejects '+'
    mpq_class q;
    if (q.set_str(s.substr(from, pos - from), 10) != 0)
        throw parse_error("malformed rational in scalar \"" + s + "\"");
    if (q.get_den() == 0) throw parse_error("zero denominator in scalar \"" + s + "\"");
    q.canonicalize();
    return q;
}

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos == text.size()) throw parse_error("empty scalar string");

    // Bare imaginary unit, possibly signed: "i", "-i", "+i".
    auto bare_i = [&](size_t p) {
        size_t q = p;
        if (q < text.size() && (text[q] == '+' || text[q] == '-')) ++q;
        skip_ws(text, q);
        if (q < text.size() && text[q] == 'i') {
            size_t r = q + 1;
            skip_ws(text, r);
            return r == text.size();
        }
        return false;
    };
    if (bare_i(pos)) {
        bool neg = text[pos] == '-';
        return Scalar(mpq_class(0), mpq_class(neg ? -1 : 1));
    }

    mpq_class first = parse_rational(text, pos);
    skip_ws(text, pos);
    if (pos == text.size()) return Scalar(first);

    if (text[pos] == 'i') {
        ++pos;
        skip_ws(text, pos);
        if (pos != text.size())
            throw parse_error("trailing characters at offset " + std::to_string(pos) +
                              " in scalar \"" + text + "\"");
        return Scalar(mpq_class(0), first);
    }

    if (text[pos] != '+' && text[pos] != '-')
        throw parse_error("expected '+', '-' or 'i' at offset " + std::to_string(pos) +
                          " in scalar \"" + text + "\"");
    mpq_class second = parse_rational(text, pos);
    skip_ws(text, pos);
    if (pos == text.size() || text[pos] != 'i')
        throw parse_error("expected trailing 'i' at offset " + std::to_string(pos) +
                          " in scalar \"" + text + "\"");
    ++pos;
    skip_ws(text, pos);
    if (pos != text.size())
        throw parse_error("trailing characters at offset " + std::to_string(pos) +
                          " in scalar \"" + text + "\"");
    return Scalar(first, second);
}

std::string Scalar::str() const {
    if (im_ == 0) return re_.get_str();
    std::string out = re_.get_str();
    if (im_ < 0) {
        out += "-";
        out += mpq_class(-im_).get_str();
    } else {
        out += "+";
        out += im_.get_str();
    }
    out += " i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace casilab
