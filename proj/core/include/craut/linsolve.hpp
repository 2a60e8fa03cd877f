#ifndef CRAUT_LINSOLVE_HPP
#define CRAUT_LINSOLVE_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace craut {

/// Sorted-by-column sparse row over Q.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

/// Exact nullspace basis of A x = 0. Rows are decomposed into connected
/// components of the column graph first; each component is brought to
/// reduced row echelon form with rational arithmetic. The basis is returned
/// as sparse vectors, one per free column, in ascending free-column order.
std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows, int ncols);

/// Exact solve of sum_i x_i * columns[i] = target (vectors as sparse rows in
/// a common coordinate space). Returns a solution (free variables at zero)
/// or nullopt when the target lies outside the span.
std::optional<std::vector<mpq_class>> solve_in_span(const std::vector<SparseRow>& columns,
                                                    const SparseRow& target);

/// Rank of the set of vectors.
size_t rank_of(const std::vector<SparseRow>& vectors);

}  // namespace craut

#endif
