#ifndef CRAUT_LIE_HPP
#define CRAUT_LIE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "craut/holo.hpp"
#include "craut/linsolve.hpp"
#include "craut/lrg.hpp"
#include "craut/tangency.hpp"

namespace craut {

/// (X + bar X) annihilates every defining function of the model after the
/// substitution w = wbar + Xi; checked by full exact expansion in
/// (z, zbar, wbar). Independent of the Ritt/LRG pipeline.
bool verify_tangency(const HoloVectorField& X, const ModelSpec& m);

/// Realification of vector fields over a shared coordinate index
/// (component, monomial, re/im), for exact rank and span computations.
class FieldCoords {
public:
    void index_fields(const std::vector<HoloVectorField>& fields);
    SparseRow vectorize(const HoloVectorField& X) const;
    /// Coordinates present in X but never indexed make X trivially
    /// outside the span; vectorize throws in that case unless relaxed.
    SparseRow vectorize_or_extend(const HoloVectorField& X);
    size_t ncoords() const { return 2 * index_.size(); }

private:
    std::map<std::pair<size_t, Mono>, int> index_;
};

struct GradingResult {
    bool ok = false;
    std::string failure;
    std::vector<HoloVectorField> basis;       // weighted-homogeneous, weight-sorted
    std::vector<int> field_weight;            // per basis entry
    std::map<int, std::vector<size_t>> layers;  // weight -> 1-based indices
    bool bracket_compatible = false;          // [g_i, g_j] in g_{i+j}
};

struct LieAlgebraPresentation {
    ModelSpec model;
    std::vector<unsigned> weights;
    Bounds bounds;
    size_t dimension = 0;
    std::vector<HoloVectorField> basis;
    /// (a, b) -> coefficients over the basis, a < b, 0-based;
    /// [X_a, X_b] = sum_c coeffs[c] * X_c.
    std::map<std::pair<size_t, size_t>, std::vector<mpq_class>> brackets;
    GradingResult grading;
};

class UnconvergedBounds : public std::runtime_error {
public:
    UnconvergedBounds(size_t base, size_t raised)
        : std::runtime_error("solution dimension not stabilized: " + std::to_string(base) +
                             " at the given bounds vs " + std::to_string(raised) +
                             " with bounds raised by one"),
          dim_base(base),
          dim_raised(raised) {}
    size_t dim_base;
    size_t dim_raised;
};

class ClosureError : public std::runtime_error {
public:
    ClosureError(size_t a, size_t b)
        : std::runtime_error("bracket [X" + std::to_string(a + 1) + ", X" + std::to_string(b + 1) +
                             "] leaves the span of the basis"),
          pair(a, b) {}
    std::pair<size_t, size_t> pair;
};

struct SolveOptions {
    std::optional<Bounds> bounds;
    bool stabilize = true;
};

/// Basis fields of one bounded tangency solve (no stabilization check);
/// every returned field passes verify_tangency.
std::vector<HoloVectorField> tangency_solution_basis(const ModelSpec& m, const Bounds& b);

/// Full pipeline: tangency system -> LRG -> exact realified linear solve ->
/// reconstruction, with the raise-by-one stabilization check.
/// Throws UnconvergedBounds when the dimension moves.
LieAlgebraPresentation solve_autcr(const ModelSpec& m, const SolveOptions& opts = {});

/// Exact expansion of each [X_a, X_b] over the given basis; throws
/// ClosureError when some bracket leaves the span.
std::map<std::pair<size_t, size_t>, std::vector<mpq_class>> structure_constants(
    const std::vector<HoloVectorField>& basis);

GradingResult compute_grading(const std::vector<HoloVectorField>& basis, const ModelSpec& m,
                              const std::vector<unsigned>& weights);

/// True iff candidate and basis span the same real vector space.
bool same_span(const std::vector<HoloVectorField>& basis,
               const std::vector<HoloVectorField>& candidate);

/// Coordinates of X over basis, or nullopt when outside the span.
std::optional<std::vector<mpq_class>> coordinates_in_basis(
    const std::vector<HoloVectorField>& basis, const HoloVectorField& X);

std::string render_lie_json(const LieAlgebraPresentation& lie, int indent = 2);
/// Human-readable commutator table in the paper's row-by-column layout.
std::string render_bracket_table(const LieAlgebraPresentation& lie);

}  // namespace craut

#endif
