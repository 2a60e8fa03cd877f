#ifndef CRAUT_LRG_HPP
#define CRAUT_LRG_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "craut/reduction.hpp"

namespace craut {

/// Completed, autoreduced, monic generating set of the bar-closed
/// differential ideal [Sigma] under a fixed ranking. Full-remainder zero
/// over the generators characterizes membership.
struct CanonicalSystem {
    RingPtr ring;
    Ranking ranking;
    std::vector<LinDiffPoly> generators;  // monic, autoreduced, rank-sorted
    bool inconsistent = false;
};

/// Delta-polynomial of p1, p2: cancels the least common derivative of the
/// leaders; zero when the leaders live on distinct indeterminates.
LinDiffPoly delta_polynomial(const LinDiffPoly& p1, const LinDiffPoly& p2, const Ranking& r);

/// LinCons Rosenfeld-Groebner completion. Processes a FIFO queue of
/// unordered generator pairs; each pair contributes the Delta-polynomials of
/// all four bar combinations, so the result is confluent against bars too.
CanonicalSystem lrg(const std::vector<LinDiffPoly>& sigma, const Ranking& r);

/// p lies in [Sigma] iff its full remainder over the completed system is 0.
bool ideal_membership(const LinDiffPoly& p, const CanonicalSystem& G);

/// Derivatives of order <= bound not reachable as derivations of any leader
/// of G or bar(G); these index the free initial data of the solutions.
std::vector<Derivative> parametric_derivatives(const CanonicalSystem& G, unsigned order_bound);

/// Truncated formal power-series solution at the origin. Each Taylor
/// coefficient is an exact linear combination of parameters named after the
/// parametric derivatives ("u", "v[1,0]", ...); inhomogeneous systems also
/// carry a constant contribution under the parameter name "1".
struct SeriesTerm {
    std::vector<unsigned> monomial;  // exponents over the base variables
    std::string parameter;
    GaussRat coefficient;
};

struct SeriesSolution {
    unsigned order = 0;
    std::vector<std::string> parameters;
    /// Per unbarred-or-real unknown display name, in declaration order.
    std::vector<std::pair<std::string, std::vector<SeriesTerm>>> series;
};

/// Throws std::domain_error on an inconsistent system.
SeriesSolution power_series_solution(const CanonicalSystem& G, unsigned order);

std::string render_series_json(const SeriesSolution& s, int indent = 2);

/// Substitutes the series into p and collects the coefficient of each base
/// monomial of total degree <= check_order as a linear form in the
/// parameters; identically zero means p vanishes on the truncated solution.
bool series_satisfies(const SeriesSolution& s, const CanonicalSystem& G, const LinDiffPoly& p,
                      unsigned check_order);

}  // namespace craut

#endif
