#include "craut/mpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace craut {

MPoly MPoly::constant(size_t nvars, GaussRat c) {
    MPoly p(nvars);
    p.add_term(Mono(nvars, 0), c);
    return p;
}

MPoly MPoly::monomial(size_t nvars, Mono m, GaussRat c) {
    if (m.size() != nvars) throw std::invalid_argument("MPoly: monomial arity mismatch");
    MPoly p(nvars);
    p.add_term(m, c);
    return p;
}

MPoly MPoly::variable(size_t nvars, size_t v) {
    Mono m(nvars, 0);
    m.at(v) = 1;
    return monomial(nvars, std::move(m), GaussRat::one());
}

GaussRat MPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRat() : it->second;
}

void MPoly::add_term(const Mono& m, const GaussRat& c) {
    if (c.is_zero()) return;
    if (m.size() != nvars_) throw std::invalid_argument("MPoly: term arity mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly p(nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly p(a.nvars_);
    Mono m(a.nvars_, 0);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
            p.add_term(m, ca * cb);
        }
    return p;
}

MPoly MPoly::scaled(const GaussRat& c) const {
    MPoly p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

MPoly MPoly::conj_coeffs() const {
    MPoly p(nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, c.conj());
    return p;
}

MPoly MPoly::derivative(size_t var) const {
    MPoly p(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d = m;
        --d[var];
        p.add_term(d, c * GaussRat(static_cast<long>(m[var])));
    }
    return p;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc = constant(nvars_, GaussRat::one());
    for (unsigned t = 0; t < e; ++t) acc = acc * *this;
    return acc;
}

unsigned MPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
    return d;
}

unsigned MPoly::degree_in(size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

unsigned MPoly::degree_range(const Mono& m, size_t first, size_t last) const {
    unsigned d = 0;
    for (size_t v = first; v < last; ++v) d += m[v];
    return d;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("MPoly: compose arity mismatch");
    size_t target = images.empty() ? 0 : images[0].nvars();
    MPoly out(target);
    std::map<std::pair<size_t, unsigned>, MPoly> pow_cache;
    auto power = [&](size_t v, unsigned e) -> const MPoly& {
        auto key = std::make_pair(v, e);
        auto it = pow_cache.find(key);
        if (it == pow_cache.end()) it = pow_cache.emplace(key, images[v].pow(e)).first;
        return it->second;
    };
    for (const auto& [m, c] : terms_) {
        MPoly prod = MPoly::constant(target, c);
        for (size_t v = 0; v < nvars_; ++v)
            if (m[v] > 0) prod = prod * power(v, m[v]);
        out += prod;
    }
    return out;
}

MPoly MPoly::remap(size_t target_nvars, const std::vector<size_t>& perm) const {
    if (perm.size() != nvars_) throw std::invalid_argument("MPoly: remap arity mismatch");
    MPoly out(target_nvars);
    for (const auto& [m, c] : terms_) {
        Mono t(target_nvars, 0);
        for (size_t v = 0; v < nvars_; ++v) t.at(perm[v]) += m[v];
        out.add_term(t, c);
    }
    return out;
}

}  // namespace craut
