#include "craut/gaussrat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace craut {

GaussRat GaussRat::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("GaussRat: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussRat(q);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

namespace {

std::string rat_str(const mpq_class& q) {
    return q.get_str();
}

// "3", "-3/4" -> mpq; positions advance past the number.
mpq_class parse_rat(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument("GaussRat: expected number in '" + s + "'");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den) throw std::invalid_argument("GaussRat: expected denominator in '" + s + "'");
    }
    mpq_class q(s.substr(start, pos - start));
    q.canonicalize();
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("GaussRat: zero denominator in '" + s + "'");
    return q;
}

}  // namespace

std::string GaussRat::str() const {
    if (is_zero()) return "0";
    if (sgn(im_) == 0) return rat_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rat_str(im_) + "*i";
    if (sgn(re_) == 0) return imag;
    std::string out = "(" + rat_str(re_);
    if (imag[0] != '-') out += "+";
    out += imag + ")";
    return out;
}

GaussRat GaussRat::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("GaussRat: empty input");
    bool wrapped = s.front() == '(' && s.back() == ')';
    if (wrapped) s = s.substr(1, s.size() - 2);

    GaussRat out;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw std::invalid_argument("GaussRat: expected '+'/'-' in '" + text + "'");
        }
        if (pos < s.size() && s[pos] == 'i' ) {
            out.im_ += sign;
            ++pos;
            continue;
        }
        mpq_class q = parse_rat(s, pos);
        if (pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == 'i') {
            out.im_ += sign * q;
            pos += 2;
        } else if (pos < s.size() && s[pos] == 'i') {
            out.im_ += sign * q;
            ++pos;
        } else {
            out.re_ += sign * q;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& x) {
    return os << x.str();
}

}  // namespace craut
