#include "craut/ranking.hpp"

#include <stdexcept>

namespace craut {

Ranking::Ranking(RingPtr ring, RankingKind kind, const std::vector<std::string>& blocks)
    : ring_(std::move(ring)), kind_(kind), block_names_(blocks) {
    block_pos_.assign(ring_->nindets(), -1);
    int pos = 0;
    for (const std::string& name : blocks) {
        int id = ring_->find(name);
        if (id < 0) throw std::invalid_argument("ranking: unknown indeterminate '" + name + "'");
        if (ring_->indet(id).is_barred)
            throw std::invalid_argument("ranking: blocks must list unbarred names ('" + name + "')");
        block_pos_[id] = pos;
        block_pos_[ring_->bar_of(id)] = pos;
        ++pos;
    }
    for (size_t id = 0; id < ring_->nindets(); ++id) {
        if (block_pos_[id] >= 0) continue;
        // Unlisted pairs share their unbarred representative's slot.
        int rep = ring_->indet(id).is_barred ? ring_->bar_of(static_cast<int>(id))
                                             : static_cast<int>(id);
        block_pos_[id] = pos + rep;
    }
}

int Ranking::compare(const Derivative& a, const Derivative& b) const {
    if (a.indet < 0 || b.indet < 0) throw std::invalid_argument("ranking: invalid derivative");
    if (a.op.nvars() != ring_->nderivations() || b.op.nvars() != ring_->nderivations())
        throw std::invalid_argument("ranking: derivative from a different ring signature");

    const int block_a = block_pos_.at(a.indet);
    const int block_b = block_pos_.at(b.indet);
    const unsigned ord_a = a.op.order();
    const unsigned ord_b = b.op.order();

    auto cmp = [](auto x, auto y) { return x < y ? -1 : (x > y ? 1 : 0); };

    int c = 0;
    if (kind_ == RankingKind::orderly) {
        if ((c = cmp(ord_a, ord_b))) return c;
        if ((c = cmp(block_b, block_a))) return c;  // earlier block ranks higher
    } else {
        if ((c = cmp(block_b, block_a))) return c;
        if ((c = cmp(ord_a, ord_b))) return c;
    }
    const auto& ea = a.op.exponents();
    const auto& eb = b.op.exponents();
    for (size_t j = 0; j < ea.size(); ++j)
        if ((c = cmp(ea[j], eb[j]))) return c;
    // Same block, order, exponents: unbarred above barred, then id order
    // (distinct unbarred ids in one slot cannot happen; ids settle ties).
    const bool bar_a = ring_->indet(a.indet).is_barred;
    const bool bar_b = ring_->indet(b.indet).is_barred;
    if ((c = cmp(bar_b, bar_a))) return c;
    return cmp(b.indet, a.indet);
}

}  // namespace craut
