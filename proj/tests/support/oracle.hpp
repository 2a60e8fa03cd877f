#ifndef CRAUT_TESTS_ORACLE_HPP
#define CRAUT_TESTS_ORACLE_HPP

#include <vector>

#include "craut/holo.hpp"
#include "craut/model.hpp"
#include "craut/tangency.hpp"

namespace craut::testing {

/// Brute-force tangency solver: a fully generic polynomial ansatz under the
/// weighted bounds, direct substitution of w = wbar + Xi into
/// (X + bar X)(w_j - wbar_j - Xi_j), naive monomial coefficient extraction
/// over (z, zbar, wbar), and one exact realified linear solve. No Ritt
/// reduction, no LRG, no Taylor-shift machinery anywhere on this path.
std::vector<HoloVectorField> brute_force_autcr(const ModelSpec& m, const Bounds& b);

}  // namespace craut::testing

#endif
