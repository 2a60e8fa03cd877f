#ifndef CRAUT_MPOLY_HPP
#define CRAUT_MPOLY_HPP

#include <map>
#include <vector>

#include "craut/gaussrat.hpp"

namespace craut {

using Mono = std::vector<unsigned>;

/// Sparse multivariate polynomial over Q(i) with a fixed variable count.
/// Plain exponent-vector arithmetic; no variable names at this level.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(size_t nvars) : nvars_(nvars) {}
    static MPoly constant(size_t nvars, GaussRat c);
    static MPoly monomial(size_t nvars, Mono m, GaussRat c);
    static MPoly variable(size_t nvars, size_t v);

    size_t nvars() const { return nvars_; }
    const std::map<Mono, GaussRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    GaussRat coeff(const Mono& m) const;
    void add_term(const Mono& m, const GaussRat& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    MPoly scaled(const GaussRat& c) const;
    MPoly conj_coeffs() const;
    MPoly derivative(size_t var) const;
    MPoly pow(unsigned e) const;

    unsigned total_degree() const;
    unsigned degree_in(size_t var) const;
    /// Sum of exponents over vars in [first, last).
    unsigned degree_range(const Mono& m, size_t first, size_t last) const;

    /// Substitutes images[v] for variable v; all images share one target ring.
    MPoly compose(const std::vector<MPoly>& images) const;

    /// Reindexes variables: target exponent slot perm[v] receives var v.
    MPoly remap(size_t target_nvars, const std::vector<size_t>& perm) const;

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.terms_ == b.terms_;
    }

private:
    size_t nvars_ = 0;
    std::map<Mono, GaussRat> terms_;
};

}  // namespace craut

#endif
