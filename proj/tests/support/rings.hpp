#ifndef CRAUT_TESTS_RINGS_HPP
#define CRAUT_TESTS_RINGS_HPP

#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include "craut/poly.hpp"
#include "craut/ranking.hpp"
#include "craut/textio.hpp"

namespace craut::testing {

/// Q(x,y)[u,v] with self-conjugate unknowns (the real toy setting).
inline RingPtr real_uv() {
    auto ring = std::make_shared<DiffRing>();
    ring->add_derivation("x");
    ring->add_derivation("y");
    ring->add_real_unknown("u");
    ring->add_real_unknown("v");
    return ring;
}

/// Q(x,y)[u, bar(u), v, bar(v)] with tag conjugates.
inline RingPtr tagged_uv() {
    auto ring = std::make_shared<DiffRing>();
    ring->add_derivation("x");
    ring->add_derivation("y");
    ring->add_tagged_unknown("u");
    ring->add_tagged_unknown("v");
    return ring;
}

inline LinDiffPoly P(const RingPtr& ring, const std::string& text) {
    return parse_poly(text, ring);
}

inline Derivative D(const RingPtr& ring, const std::string& name, std::vector<unsigned> exps) {
    int id = ring->find(name);
    REQUIRE(id >= 0);
    return Derivative{id, DerivOp(std::move(exps))};
}

}  // namespace craut::testing

#endif
