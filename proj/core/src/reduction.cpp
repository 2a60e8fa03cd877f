#include "craut/reduction.hpp"

namespace craut {

size_t ReducerSet::add(const LinDiffPoly& q) {
    size_t idx = count_++;
    if (q.is_zero()) return idx;
    if (q.is_constant()) {
        constant_present_ = true;
        return idx;
    }
    const Ranking& r = *ranking_;
    Entry plain{q, idx, false, q.leader(r), {}};
    plain.lc = q.coeff(plain.ld);
    entries_.push_back(std::move(plain));
    index_entry(entries_.size() - 1);
    if (extended_) {
        Entry mirror{q.barred(), idx, true, {}, {}};
        mirror.ld = mirror.poly.leader(r);
        mirror.lc = mirror.poly.coeff(mirror.ld);
        entries_.push_back(std::move(mirror));
        index_entry(entries_.size() - 1);
    }
    return idx;
}

void ReducerSet::index_entry(size_t pos) {
    const Entry& e = entries_[pos];
    auto& buckets = e.barred ? barred_by_indet_ : plain_by_indet_;
    if (buckets.size() <= static_cast<size_t>(e.ld.indet))
        buckets.resize(e.ld.indet + 1);
    buckets[e.ld.indet].push_back(pos);
}

const ReducerSet::Entry* ReducerSet::find(const Derivative& d, size_t exclude_q) const {
    for (const auto* buckets : {&plain_by_indet_, &barred_by_indet_}) {
        if (buckets->size() <= static_cast<size_t>(d.indet)) continue;
        for (size_t pos : (*buckets)[d.indet]) {
            const Entry& e = entries_[pos];
            if (e.q_index != exclude_q && e.ld.op.divides(d.op)) return &e;
        }
    }
    return nullptr;
}

bool ReducerSet::reducible(const Derivative& d) const { return find(d) != nullptr; }

ReduceResult reduce_with(const LinDiffPoly& p, const ReducerSet& divisors, size_t exclude_q) {
    ReduceResult res;
    res.remainder = LinDiffPoly(p.ring());
    if (divisors.constant_present()) {
        // A nonzero constant generates everything; flag and collapse.
        res.constant_collapse = true;
        return res;
    }
    const Ranking& r = divisors.ranking();

    // Working terms keyed in ranking order: the leader is the last entry,
    // and elimination steps merge the subtracted multiple in place.
    auto rank_less = [&r](const Derivative& a, const Derivative& b) { return r.less(a, b); };
    std::map<Derivative, GaussRat, decltype(rank_less)> work(rank_less);
    for (const auto& [d, c] : p.terms()) work.emplace(d, c);
    GaussRat work_constant = p.constant_part();

    while (!work.empty()) {
        auto lead = std::prev(work.end());
        Derivative ld_h = lead->first;
        GaussRat lead_coeff = lead->second;
        res.rank_trace.push_back(ld_h);
        if (const ReducerSet::Entry* hit = divisors.find(ld_h, exclude_q)) {
            DerivOp theta = hit->ld.op.quotient_of(ld_h.op);
            GaussRat c = lead_coeff / hit->lc;
            for (const auto& [d, k] : hit->poly.terms()) {
                Derivative shifted{d.indet, d.op.times(theta)};
                auto [it, inserted] = work.emplace(shifted, -(c * k));
                if (!inserted) {
                    it->second -= c * k;
                    if (it->second.is_zero()) work.erase(it);
                }
            }
            if (theta.is_identity()) work_constant -= c * hit->poly.constant_part();
            res.certificate.push_back({hit->q_index, hit->barred, std::move(theta), std::move(c)});
        } else {
            res.remainder.add_term(ld_h, lead_coeff);
            work.erase(lead);
        }
    }
    res.remainder.add_constant(work_constant);
    return res;
}

namespace {

ReducerSet build_set(std::span<const LinDiffPoly> Q, const Ranking& r, bool extended) {
    ReducerSet set(r, extended);
    for (const LinDiffPoly& q : Q) set.add(q);
    return set;
}

}  // namespace

ReduceResult ritt_reduce(const LinDiffPoly& p, std::span<const LinDiffPoly> Q, const Ranking& r) {
    return reduce_with(p, build_set(Q, r, false));
}

ReduceResult extended_ritt_reduce(const LinDiffPoly& p, std::span<const LinDiffPoly> Q,
                                  const Ranking& r) {
    return reduce_with(p, build_set(Q, r, true));
}

LinDiffPoly replay_certificate(std::span<const CertEntry> cert, std::span<const LinDiffPoly> Q) {
    LinDiffPoly sum;
    for (const CertEntry& e : cert) {
        const LinDiffPoly& q = Q[e.q_index];
        LinDiffPoly used = e.barred ? q.barred() : q;
        sum += used.derived(e.theta).scaled(e.coeff);
    }
    return sum;
}

bool is_reduced_against(const LinDiffPoly& p, std::span<const LinDiffPoly> Q, const Ranking& r,
                        bool extended) {
    ReducerSet set = build_set(Q, r, extended);
    if (set.constant_present()) return false;
    for (const auto& [d, c] : p.terms())
        if (set.reducible(d)) return false;
    return true;
}

}  // namespace craut
