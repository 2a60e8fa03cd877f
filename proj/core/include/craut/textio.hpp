#ifndef CRAUT_TEXTIO_HPP
#define CRAUT_TEXTIO_HPP

#include <string>
#include <vector>

#include "craut/poly.hpp"
#include "craut/ranking.hpp"

namespace craut {

/// Canonical text form. Terms are listed by indeterminate declaration order,
/// then by exponent vector descending (first derivation most significant);
/// the identity derivation drops its bracket: "u", "bar(u)[0,1]", "u[2,1]".
std::string render_poly(const LinDiffPoly& p);

/// Parses the text form back; superset grammar also accepts unspaced input
/// and parenthesized mixed coefficients. Throws std::invalid_argument with
/// the offending token on malformed input.
LinDiffPoly parse_poly(const std::string& text, const RingPtr& ring);

std::string render_derivative(const DiffRing& ring, const Derivative& d);

/// A differential ring + ranking + equation list, as read from a system file.
struct SystemDoc {
    RingPtr ring;
    Ranking ranking;
    std::vector<LinDiffPoly> equations;
    bool inconsistent = false;
};

/// JSON schema: {"derivations":[...],
///               "unknowns":[{"name":"u","conjugate":"self"|"tagged"},...],
///               "ranking":{"kind":"orderly"|"elimination","blocks":[...]},
///               "equations":[...]}   ("generators" accepted for equations,
/// so emitted canonical-system documents re-ingest unchanged).
SystemDoc parse_system_json(const std::string& json_text);
std::string render_system_json(const SystemDoc& doc, bool as_canonical, int indent = 2);

}  // namespace craut

#endif
