#ifndef CRAUT_RING_HPP
#define CRAUT_RING_HPP

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace craut {

/// Commutative derivation operator theta = d1^t1 ... dm^tm, stored as its
/// exponent vector over the ring's derivation variables.
class DerivOp {
public:
    DerivOp() = default;
    explicit DerivOp(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
    static DerivOp identity(size_t nvars) { return DerivOp(std::vector<unsigned>(nvars, 0)); }
    static DerivOp unit(size_t nvars, size_t var);

    const std::vector<unsigned>& exponents() const { return exps_; }
    size_t nvars() const { return exps_.size(); }
    unsigned order() const;
    bool is_identity() const { return order() == 0; }

    DerivOp times(const DerivOp& o) const;
    /// Componentwise <=; the premise of theta = phi * quotient.
    bool divides(const DerivOp& o) const;
    DerivOp quotient_of(const DerivOp& larger) const;  // larger / *this
    static DerivOp lcm(const DerivOp& a, const DerivOp& b);

    friend bool operator==(const DerivOp& a, const DerivOp& b) { return a.exps_ == b.exps_; }
    friend std::strong_ordering operator<=>(const DerivOp& a, const DerivOp& b) {
        return a.exps_ <=> b.exps_;
    }

private:
    std::vector<unsigned> exps_;
};

struct Indeterminate {
    std::string name;   // base name; barred partner shares it
    int bar_partner;    // id of conjugate indeterminate (self for real unknowns)
    bool is_barred;
};

/// Signature of a differential polynomial ring: derivation variables plus
/// differential indeterminates with their conjugation structure. Shared by
/// value through shared_ptr; polynomials from different rings never mix.
class DiffRing {
public:
    int add_derivation(std::string name);
    /// Self-conjugate (real) unknown; returns its id.
    int add_real_unknown(std::string name);
    /// Tagged unknown with a conjugate partner; returns the unbarred id
    /// (barred partner is the next id).
    int add_tagged_unknown(std::string name);

    size_t nderivations() const { return derivations_.size(); }
    size_t nindets() const { return indets_.size(); }
    const std::string& derivation_name(size_t j) const { return derivations_[j]; }
    const std::vector<std::string>& derivations() const { return derivations_; }
    const Indeterminate& indet(size_t id) const { return indets_[id]; }
    int bar_of(int id) const { return indets_[id].bar_partner; }

    /// Rendered name: "u" or "bar(u)".
    std::string display_name(int id) const;
    /// Id for "u" / "bar(u)"; -1 when absent.
    int find(const std::string& display) const;
    int find_derivation(const std::string& name) const;

    friend bool operator==(const DiffRing& a, const DiffRing& b);

private:
    std::vector<std::string> derivations_;
    std::vector<Indeterminate> indets_;
};

using RingPtr = std::shared_ptr<const DiffRing>;

/// Throws std::invalid_argument unless both operands live in the same ring.
void check_same_ring(const RingPtr& a, const RingPtr& b);

/// A derivative theta*u of one differential indeterminate.
struct Derivative {
    int indet = -1;
    DerivOp op;

    /// Structural (ranking-independent) order used for canonical storage.
    friend std::strong_ordering operator<=>(const Derivative& a, const Derivative& b) {
        if (auto c = a.indet <=> b.indet; c != 0) return c;
        return a.op <=> b.op;
    }
    friend bool operator==(const Derivative& a, const Derivative& b) = default;
};

/// bar(theta*u) = theta*bar(u); bar commutes with the derivations.
inline Derivative bar(const DiffRing& ring, const Derivative& d) {
    return Derivative{ring.bar_of(d.indet), d.op};
}

/// lcd(theta*u, phi*u) = lcm(theta, phi)*u; disjoint indeterminates have none.
inline bool has_lcd(const Derivative& a, const Derivative& b) { return a.indet == b.indet; }
Derivative lcd(const Derivative& a, const Derivative& b);

}  // namespace craut

#endif
