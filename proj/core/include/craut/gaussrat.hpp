#ifndef CRAUT_GAUSSRAT_HPP
#define CRAUT_GAUSSRAT_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace craut {

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
/// mpq_class keeps both parts in lowest terms with positive denominators.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}
    GaussRat(const mpq_class& re) : re_(re), im_(0) {}
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat zero() { return GaussRat(); }
    static GaussRat one() { return GaussRat(1); }
    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }
    static GaussRat rational(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// Renders "p/q", "p/q*i", "i", "-i", or "(p/q+r/s*i)"; integers drop "/1".
    std::string str() const;

    /// Inverse of str(); throws std::invalid_argument on malformed input.
    static GaussRat parse(const std::string& text);

private:
    mpq_class re_;
    mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& x);

}  // namespace craut

#endif
