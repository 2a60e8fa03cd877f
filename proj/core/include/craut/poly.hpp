#ifndef CRAUT_POLY_HPP
#define CRAUT_POLY_HPP

#include <map>
#include <vector>

#include "craut/gaussrat.hpp"
#include "craut/ring.hpp"

namespace craut {

class Ranking;

/// Linear differential polynomial with constant Q(i) coefficients:
/// a finite map derivative -> coefficient plus a constant term. Never stores
/// zero coefficients; equality is structural.
class LinDiffPoly {
public:
    LinDiffPoly() = default;
    explicit LinDiffPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static LinDiffPoly constant(RingPtr ring, GaussRat c);
    static LinDiffPoly term(RingPtr ring, Derivative d, GaussRat c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Derivative, GaussRat>& terms() const { return terms_; }
    const GaussRat& constant_part() const { return constant_; }

    bool is_zero() const { return terms_.empty() && constant_.is_zero(); }
    bool is_constant() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    void add_term(const Derivative& d, const GaussRat& c);
    void add_constant(const GaussRat& c) { constant_ += c; }
    GaussRat coeff(const Derivative& d) const;

    LinDiffPoly operator-() const;
    LinDiffPoly& operator+=(const LinDiffPoly& o);
    LinDiffPoly& operator-=(const LinDiffPoly& o);
    friend LinDiffPoly operator+(LinDiffPoly a, const LinDiffPoly& b) { return a += b; }
    friend LinDiffPoly operator-(LinDiffPoly a, const LinDiffPoly& b) { return a -= b; }

    LinDiffPoly scaled(const GaussRat& c) const;
    /// theta applied to every term; a derived constant vanishes.
    LinDiffPoly derived(const DerivOp& theta) const;
    /// Conjugates coefficients and swaps each indeterminate with its partner.
    LinDiffPoly barred() const;

    /// Highest derivative under the ranking. Throws on zero/constant input.
    Derivative leader(const Ranking& r) const;
    GaussRat initial(const Ranking& r) const { return coeff(leader(r)); }
    /// rank(p) = leader for linear polynomials (degree 1).
    Derivative rank(const Ranking& r) const { return leader(r); }
    /// Scaled so the leading coefficient is 1.
    LinDiffPoly monic(const Ranking& r) const;

    friend bool operator==(const LinDiffPoly& a, const LinDiffPoly& b) {
        return a.terms_ == b.terms_ && a.constant_ == b.constant_;
    }
    friend bool operator!=(const LinDiffPoly& a, const LinDiffPoly& b) { return !(a == b); }

    /// Ranking-independent total order for deterministic containers.
    static bool structural_less(const LinDiffPoly& a, const LinDiffPoly& b);

private:
    RingPtr ring_;
    std::map<Derivative, GaussRat> terms_;
    GaussRat constant_;
};

}  // namespace craut

#endif
