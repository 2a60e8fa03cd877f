#ifndef CRAUT_TANGENCY_HPP
#define CRAUT_TANGENCY_HPP

#include <map>
#include <string>
#include <vector>

#include "craut/model.hpp"
#include "craut/poly.hpp"
#include "craut/ranking.hpp"

namespace craut {

/// Ansatz truncation. z_bound_* cap the z-degree of the unknown-function
/// expansions; w_bound caps the grading weight a solution component may
/// carry, so unknown Z^{i,t} / W^{l,t} admits w-monomials of weighted degree
/// up to weight(component) - t + w_bound.
struct Bounds {
    std::vector<unsigned> z_bound_Z;  // per i = 1..n
    std::vector<unsigned> z_bound_W;  // per l = 1..k
    unsigned w_bound = 0;

    Bounds raised(unsigned by) const;
    unsigned max_z_bound() const;
};

struct DegreeInfo {
    std::vector<unsigned> weights;  // weight(w_l) = deg Xi_l; weight(z_i) = 1
    Bounds bounds;
};

/// Default weights and truncation bounds for a model: z-bound of Z is the
/// top weight, z-bound of W^l is weight(w_l), w_bound is the top weight.
DegreeInfo degree_bounds(const ModelSpec& m);

/// One unknown coefficient function of the expansions
/// Z^i = sum z^alpha Z^{i,alpha}(w), W^l = sum z^alpha W^{l,alpha}(w).
struct Unknown {
    bool is_w;
    size_t comp;     // 0-based i or l
    Mono alpha;      // z-multiindex
    int indet;       // unbarred indeterminate id
    unsigned weight; // weight of the component the unknown feeds
};

/// The differential ring of the tangency system: every unknown paired with
/// a tag conjugate, derivations w_1..w_k.
struct UnknownCatalog {
    RingPtr ring;
    std::vector<Unknown> unknowns;  // declaration order: Z's then W's
    size_t n = 0, k = 0;

    int find_indet(bool is_w, size_t comp, const Mono& alpha) const;
    const Unknown* by_indet(int indet_id) const;  // unbarred ids only
    std::vector<std::string> block_names() const;
};

UnknownCatalog build_catalog(const ModelSpec& m, const Bounds& b);

/// Coefficient of zbar^alpha z^beta in prod_j Xi_j^{gamma_j}.
GaussRat a_poly(const Mono& alpha, const Mono& beta, const Mono& gamma, const XiTable& xi);

struct TangencyKey {
    size_t j;  // defining equation, 0-based
    Mono mu;   // z-exponent
    Mono nu;   // zbar-exponent
    friend auto operator<=>(const TangencyKey&, const TangencyKey&) = default;
};

/// The LinCons PDE system: one equation per (j, mu, nu) bidegree of the
/// substituted tangency identity, over the catalog ring. Zero coefficients
/// are not stored; equation() returns zero for absent keys.
struct TangencySystem {
    UnknownCatalog catalog;
    XiTable xi;
    unsigned mu_max = 0, nu_max = 0;  // emission caps (total degree)
    unsigned gamma_order_cap = 0;     // sharp Taylor-shift cutoff actually used
    std::map<TangencyKey, LinDiffPoly> equations;

    LinDiffPoly equation(const TangencyKey& key) const;
    std::vector<LinDiffPoly> all_equations() const;
};

TangencySystem tangency_system(const ModelSpec& m, const Bounds& b);

/// Unknowns forced identically zero by single-term rows of the system built
/// one z-degree beyond the given bounds (the coefficient chase of the
/// pure-zbar^k and z*zbar^k rows). Reported against the probe catalog.
struct TruncationReport {
    UnknownCatalog probe_catalog;
    std::vector<int> killed;  // indet ids of vanishing unknowns, sorted
    bool is_killed(int indet_id) const;
    std::string summary() const;
};

TruncationReport truncation_lemma(const ModelSpec& m, const Bounds& b);

}  // namespace craut

#endif
