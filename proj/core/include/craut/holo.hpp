#ifndef CRAUT_HOLO_HPP
#define CRAUT_HOLO_HPP

#include <string>
#include <vector>

#include "craut/mpoly.hpp"

namespace craut {

/// Holomorphic polynomial vector field on C^{n+k}:
/// X = sum Z^i(z,w) d/dz_i + sum W^l(z,w) d/dw_l.
/// Component polynomials live over n+k variables ordered [z_1..z_n, w_1..w_k].
struct HoloVectorField {
    size_t n = 0, k = 0;
    std::vector<MPoly> z_comp;  // n entries
    std::vector<MPoly> w_comp;  // k entries

    static HoloVectorField zero(size_t n, size_t k);
    const MPoly& component(size_t idx) const;  // 0..n-1 z parts, n..n+k-1 w parts
    MPoly& component(size_t idx);
    bool is_zero() const;

    HoloVectorField operator-() const;
    HoloVectorField& operator+=(const HoloVectorField& o);
    friend HoloVectorField operator+(HoloVectorField a, const HoloVectorField& b) {
        return a += b;
    }
    HoloVectorField scaled(const GaussRat& c) const;

    friend bool operator==(const HoloVectorField& a, const HoloVectorField& b) = default;
};

/// Exact Lie bracket [X, Y] = X(Y-coeffs) - Y(X-coeffs); throws on
/// mismatched (n, k) signatures.
HoloVectorField bracket(const HoloVectorField& X, const HoloVectorField& Y);

/// Text form "z*d/dz + 2*w1*d/dw1 + (4*w1+2*i*z^2)*d/dw2"; variables are
/// z (or z1..zn when n > 1) and w1..wk.
std::string render_field(const HoloVectorField& X);
HoloVectorField parse_field(const std::string& text, size_t n, size_t k);

std::string render_holo_poly(const MPoly& p, size_t n, size_t k);
MPoly parse_holo_poly(const std::string& text, size_t n, size_t k);

}  // namespace craut

#endif
