#include "craut/poly.hpp"

#include <stdexcept>

#include "craut/ranking.hpp"

namespace craut {

LinDiffPoly LinDiffPoly::constant(RingPtr ring, GaussRat c) {
    LinDiffPoly p(std::move(ring));
    p.constant_ = std::move(c);
    return p;
}

LinDiffPoly LinDiffPoly::term(RingPtr ring, Derivative d, GaussRat c) {
    LinDiffPoly p(std::move(ring));
    p.add_term(d, c);
    return p;
}

void LinDiffPoly::add_term(const Derivative& d, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussRat LinDiffPoly::coeff(const Derivative& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? GaussRat() : it->second;
}

LinDiffPoly LinDiffPoly::operator-() const {
    LinDiffPoly p(ring_);
    for (const auto& [d, c] : terms_) p.terms_.emplace(d, -c);
    p.constant_ = -constant_;
    return p;
}

LinDiffPoly& LinDiffPoly::operator+=(const LinDiffPoly& o) {
    if (!ring_) ring_ = o.ring_;
    else if (!o.is_zero()) check_same_ring(ring_, o.ring_);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    constant_ += o.constant_;
    return *this;
}

LinDiffPoly& LinDiffPoly::operator-=(const LinDiffPoly& o) {
    if (!ring_) ring_ = o.ring_;
    else if (!o.is_zero()) check_same_ring(ring_, o.ring_);
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    constant_ -= o.constant_;
    return *this;
}

LinDiffPoly LinDiffPoly::scaled(const GaussRat& c) const {
    LinDiffPoly p(ring_);
    if (c.is_zero()) return p;
    for (const auto& [d, k] : terms_) p.terms_.emplace(d, k * c);
    p.constant_ = constant_ * c;
    return p;
}

LinDiffPoly LinDiffPoly::derived(const DerivOp& theta) const {
    if (theta.is_identity()) return *this;
    LinDiffPoly p(ring_);
    for (const auto& [d, c] : terms_)
        p.terms_.emplace(Derivative{d.indet, d.op.times(theta)}, c);
    return p;
}

LinDiffPoly LinDiffPoly::barred() const {
    LinDiffPoly p(ring_);
    for (const auto& [d, c] : terms_) p.add_term(bar(*ring_, d), c.conj());
    p.constant_ = constant_.conj();
    return p;
}

Derivative LinDiffPoly::leader(const Ranking& r) const {
    if (terms_.empty())
        throw std::domain_error("leader: zero or constant differential polynomial");
    check_same_ring(ring_, r.ring());
    auto it = terms_.begin();
    Derivative best = it->first;
    for (++it; it != terms_.end(); ++it)
        if (r.less(best, it->first)) best = it->first;
    return best;
}

LinDiffPoly LinDiffPoly::monic(const Ranking& r) const {
    GaussRat lc = initial(r);
    return scaled(GaussRat::one() / lc);
}

bool LinDiffPoly::structural_less(const LinDiffPoly& a, const LinDiffPoly& b) {
    auto ita = a.terms_.begin();
    auto itb = b.terms_.begin();
    for (; ita != a.terms_.end() && itb != b.terms_.end(); ++ita, ++itb) {
        if (ita->first != itb->first) return ita->first < itb->first;
        if (!(ita->second == itb->second)) {
            if (ita->second.re() != itb->second.re()) return ita->second.re() < itb->second.re();
            return ita->second.im() < itb->second.im();
        }
    }
    if (ita != a.terms_.end()) return false;
    if (itb != b.terms_.end()) return true;
    if (a.constant_.re() != b.constant_.re()) return a.constant_.re() < b.constant_.re();
    return a.constant_.im() < b.constant_.im();
}

}  // namespace craut
