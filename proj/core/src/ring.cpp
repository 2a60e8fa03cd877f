#include "craut/ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace craut {

DerivOp DerivOp::unit(size_t nvars, size_t var) {
    std::vector<unsigned> e(nvars, 0);
    e.at(var) = 1;
    return DerivOp(std::move(e));
}

unsigned DerivOp::order() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

DerivOp DerivOp::times(const DerivOp& o) const {
    if (exps_.size() != o.exps_.size()) throw std::invalid_argument("DerivOp: arity mismatch");
    std::vector<unsigned> e(exps_.size());
    for (size_t j = 0; j < e.size(); ++j) e[j] = exps_[j] + o.exps_[j];
    return DerivOp(std::move(e));
}

bool DerivOp::divides(const DerivOp& o) const {
    if (exps_.size() != o.exps_.size()) return false;
    for (size_t j = 0; j < exps_.size(); ++j)
        if (exps_[j] > o.exps_[j]) return false;
    return true;
}

DerivOp DerivOp::quotient_of(const DerivOp& larger) const {
    if (!divides(larger)) throw std::invalid_argument("DerivOp: quotient of non-multiple");
    std::vector<unsigned> e(exps_.size());
    for (size_t j = 0; j < e.size(); ++j) e[j] = larger.exps_[j] - exps_[j];
    return DerivOp(std::move(e));
}

DerivOp DerivOp::lcm(const DerivOp& a, const DerivOp& b) {
    if (a.exps_.size() != b.exps_.size()) throw std::invalid_argument("DerivOp: arity mismatch");
    std::vector<unsigned> e(a.exps_.size());
    for (size_t j = 0; j < e.size(); ++j) e[j] = std::max(a.exps_[j], b.exps_[j]);
    return DerivOp(std::move(e));
}

int DiffRing::add_derivation(std::string name) {
    derivations_.push_back(std::move(name));
    return static_cast<int>(derivations_.size()) - 1;
}

int DiffRing::add_real_unknown(std::string name) {
    int id = static_cast<int>(indets_.size());
    indets_.push_back({std::move(name), id, false});
    return id;
}

int DiffRing::add_tagged_unknown(std::string name) {
    int id = static_cast<int>(indets_.size());
    indets_.push_back({name, id + 1, false});
    indets_.push_back({std::move(name), id, true});
    return id;
}

std::string DiffRing::display_name(int id) const {
    const Indeterminate& u = indets_.at(id);
    return u.is_barred ? "bar(" + u.name + ")" : u.name;
}

int DiffRing::find(const std::string& display) const {
    for (size_t id = 0; id < indets_.size(); ++id)
        if (display_name(static_cast<int>(id)) == display) return static_cast<int>(id);
    return -1;
}

int DiffRing::find_derivation(const std::string& name) const {
    for (size_t j = 0; j < derivations_.size(); ++j)
        if (derivations_[j] == name) return static_cast<int>(j);
    return -1;
}

bool operator==(const DiffRing& a, const DiffRing& b) {
    if (a.derivations_ != b.derivations_) return false;
    if (a.indets_.size() != b.indets_.size()) return false;
    for (size_t i = 0; i < a.indets_.size(); ++i) {
        if (a.indets_[i].name != b.indets_[i].name ||
            a.indets_[i].bar_partner != b.indets_[i].bar_partner ||
            a.indets_[i].is_barred != b.indets_[i].is_barred)
            return false;
    }
    return true;
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b))
        throw std::invalid_argument("operands belong to different ring signatures");
}

Derivative lcd(const Derivative& a, const Derivative& b) {
    if (!has_lcd(a, b)) throw std::invalid_argument("lcd: distinct indeterminates");
    return Derivative{a.indet, DerivOp::lcm(a.op, b.op)};
}

}  // namespace craut
