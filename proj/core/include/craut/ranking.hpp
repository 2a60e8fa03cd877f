#ifndef CRAUT_RANKING_HPP
#define CRAUT_RANKING_HPP

#include <string>
#include <vector>

#include "craut/ring.hpp"

namespace craut {

enum class RankingKind { orderly, elimination };

/// Total order on derivatives satisfying the ranking axioms
/// (delta v > v, and v > w implies delta v > delta w).
///
/// Orderly compares total order, then block position of the indeterminate
/// (earlier block higher), then the derivation exponent vectors
/// lexicographically with the first derivation variable most significant,
/// then unbarred above barred. Elimination puts the block first.
class Ranking {
public:
    Ranking() = default;
    /// blocks lists unbarred indeterminate names from highest to lowest;
    /// a barred indeterminate sits in its partner's block, just below it.
    /// Unlisted indeterminates fall below all listed ones in declaration order.
    Ranking(RingPtr ring, RankingKind kind, const std::vector<std::string>& blocks = {});

    const RingPtr& ring() const { return ring_; }
    RankingKind kind() const { return kind_; }
    const std::vector<std::string>& blocks() const { return block_names_; }

    /// <0, 0, >0 for less / equal / greater; equal only on identical input.
    int compare(const Derivative& a, const Derivative& b) const;
    bool less(const Derivative& a, const Derivative& b) const { return compare(a, b) < 0; }

private:
    RingPtr ring_;
    RankingKind kind_ = RankingKind::orderly;
    std::vector<std::string> block_names_;
    std::vector<int> block_pos_;  // per indeterminate id
};

}  // namespace craut

#endif
