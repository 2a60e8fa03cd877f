#include "craut/linsolve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace craut {

namespace {

// r -= c * pivot, merging sorted sparse rows.
SparseRow axpy(const SparseRow& r, const mpq_class& c, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(r.size() + pivot.size());
    size_t a = 0, b = 0;
    while (a < r.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < r.size() && r[a].first < pivot[b].first)) {
            out.push_back(r[a++]);
        } else if (a == r.size() || pivot[b].first < r[a].first) {
            out.emplace_back(pivot[b].first, -c * pivot[b].second);
            ++b;
        } else {
            mpq_class v = r[a].second - c * pivot[b].second;
            if (sgn(v) != 0) out.emplace_back(r[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

mpq_class entry_at(const SparseRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return it != r.end() && it->first == col ? it->second : mpq_class(0);
}

/// Reduced row echelon: pivots keyed by column, each pivot row scaled to a
/// leading 1 and cleared from every other pivot row.
struct Echelon {
    std::map<int, SparseRow> pivots;

    // Fully reduce a row against the pivots; nonzero survivors become pivots.
    // Returns false iff the row reduced to zero.
    bool insert(SparseRow row) {
        for (size_t a = 0; a < row.size();) {
            auto it = pivots.find(row[a].first);
            if (it == pivots.end()) {
                ++a;
                continue;
            }
            mpq_class c = row[a].second;  // pivot rows have leading 1
            row = axpy(row, c, it->second);
        }
        if (row.empty()) return false;
        mpq_class lead = row[0].second;
        for (auto& [col, v] : row) v /= lead;
        int pc = row[0].first;
        for (auto& [col, prow] : pivots) {
            mpq_class c = entry_at(prow, pc);
            if (sgn(c) != 0) prow = axpy(prow, c, row);
        }
        pivots.emplace(pc, std::move(row));
        return true;
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows, int ncols) {
    UnionFind uf(ncols);
    for (const SparseRow& r : rows)
        for (size_t a = 1; a < r.size(); ++a) uf.unite(r[a - 1].first, r[a].first);

    std::map<int, Echelon> blocks;
    for (const SparseRow& r : rows) {
        if (r.empty()) continue;
        blocks[uf.find(r[0].first)].insert(r);
    }

    std::vector<SparseRow> basis;
    for (int col = 0; col < ncols; ++col) {
        const Echelon* block = nullptr;
        auto it = blocks.find(uf.find(col));
        if (it != blocks.end()) block = &it->second;
        if (block && block->pivots.count(col)) continue;  // bound column
        // Free column: back-substitute x[col] = 1 through its block.
        SparseRow vec{{col, mpq_class(1)}};
        if (block)
            for (const auto& [pc, prow] : block->pivots) {
                mpq_class c = entry_at(prow, col);
                if (sgn(c) != 0) vec.emplace_back(pc, -c);
            }
        std::sort(vec.begin(), vec.end());
        basis.push_back(std::move(vec));
    }
    return basis;
}

std::optional<std::vector<mpq_class>> solve_in_span(const std::vector<SparseRow>& columns,
                                                    const SparseRow& target) {
    // Row per coordinate: sum_i columns[i][coord] * x_i = target[coord].
    // Assemble the transpose sparsely.
    std::map<int, SparseRow> coord_rows;
    for (size_t i = 0; i < columns.size(); ++i)
        for (const auto& [coord, v] : columns[i])
            coord_rows[coord].emplace_back(static_cast<int>(i), v);

    const int rhs_col = static_cast<int>(columns.size());
    for (const auto& [coord, v] : target) coord_rows[coord].emplace_back(rhs_col, v);

    Echelon ech;
    for (auto& [coord, row] : coord_rows) {
        std::sort(row.begin(), row.end());
        ech.insert(std::move(row));
    }
    if (ech.pivots.count(rhs_col)) return std::nullopt;  // inconsistent

    std::vector<mpq_class> x(columns.size(), mpq_class(0));
    for (const auto& [pc, prow] : ech.pivots) x[pc] = entry_at(prow, rhs_col);
    return x;
}

size_t rank_of(const std::vector<SparseRow>& vectors) {
    Echelon ech;
    size_t rank = 0;
    for (const SparseRow& v : vectors)
        if (!v.empty() && ech.insert(v)) ++rank;
    return rank;
}

}  // namespace craut
