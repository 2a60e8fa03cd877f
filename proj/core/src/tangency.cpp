#include "craut/tangency.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace craut {

namespace {

unsigned total(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0u); }

void enumerate_monos(size_t nvars, unsigned bound, Mono& cur, size_t var, unsigned used,
                     std::vector<Mono>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e + used <= bound; ++e) {
        cur[var] = e;
        enumerate_monos(nvars, bound, cur, var + 1, used + e, out);
    }
    cur[var] = 0;
}

std::vector<Mono> monos_up_to(size_t nvars, unsigned bound) {
    std::vector<Mono> out;
    Mono cur(nvars, 0);
    enumerate_monos(nvars, bound, cur, 0, 0, out);
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
        unsigned ta = total(a), tb = total(b);
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return out;
}

std::string alpha_suffix(const Mono& alpha) {
    std::string s;
    for (unsigned e : alpha) {
        if (e > 9) throw std::invalid_argument("catalog: z-degree beyond single-digit names");
        s += static_cast<char>('0' + e);
    }
    return s;
}

}  // namespace

Bounds Bounds::raised(unsigned by) const {
    Bounds b = *this;
    for (unsigned& e : b.z_bound_Z) e += by;
    for (unsigned& e : b.z_bound_W) e += by;
    b.w_bound += by;
    return b;
}

unsigned Bounds::max_z_bound() const {
    unsigned m = 0;
    for (unsigned e : z_bound_Z) m = std::max(m, e);
    for (unsigned e : z_bound_W) m = std::max(m, e);
    return m;
}

DegreeInfo degree_bounds(const ModelSpec& m) {
    DegreeInfo info;
    info.weights = model_weights(m);
    unsigned top = 0;
    for (unsigned w : info.weights) top = std::max(top, w);
    info.bounds.z_bound_Z.assign(m.n, top);
    info.bounds.z_bound_W = info.weights;
    info.bounds.w_bound = top;
    return info;
}

int UnknownCatalog::find_indet(bool is_w, size_t comp, const Mono& alpha) const {
    for (const Unknown& u : unknowns)
        if (u.is_w == is_w && u.comp == comp && u.alpha == alpha) return u.indet;
    return -1;
}

const Unknown* UnknownCatalog::by_indet(int indet_id) const {
    for (const Unknown& u : unknowns)
        if (u.indet == indet_id) return &u;
    return nullptr;
}

std::vector<std::string> UnknownCatalog::block_names() const {
    std::vector<std::string> names;
    names.reserve(unknowns.size());
    for (const Unknown& u : unknowns) names.push_back(ring->indet(u.indet).name);
    return names;
}

UnknownCatalog build_catalog(const ModelSpec& m, const Bounds& b) {
    UnknownCatalog cat;
    cat.n = m.n;
    cat.k = m.k;
    auto ring = std::make_shared<DiffRing>();
    for (size_t l = 1; l <= m.k; ++l) ring->add_derivation("w" + std::to_string(l));

    std::vector<unsigned> weights = model_weights(m);
    auto add = [&](bool is_w, size_t comp, const Mono& alpha, unsigned weight) {
        std::string name;
        if (is_w)
            name = "W" + std::to_string(comp + 1) + "_" + alpha_suffix(alpha);
        else if (m.n == 1)
            name = "Z" + alpha_suffix(alpha);
        else
            name = "Z" + std::to_string(comp + 1) + "_" + alpha_suffix(alpha);
        int id = ring->add_tagged_unknown(name);
        cat.unknowns.push_back({is_w, comp, alpha, id, weight});
    };

    for (size_t i = 0; i < m.n; ++i)
        for (const Mono& alpha : monos_up_to(m.n, b.z_bound_Z.at(i))) add(false, i, alpha, 1);
    for (size_t l = 0; l < m.k; ++l)
        for (const Mono& alpha : monos_up_to(m.n, b.z_bound_W.at(l)))
            add(true, l, alpha, weights[l]);

    cat.ring = ring;
    return cat;
}

namespace {

/// Cache of truncated powers Xi^gamma over the (zbar, z) variables;
/// monomials beyond the caps can never reach an emitted bidegree.
class XiPowCache {
public:
    XiPowCache(const XiTable& xi, unsigned zb_cap, unsigned z_cap)
        : xi_(xi), zb_cap_(zb_cap), z_cap_(z_cap) {}

    MPoly truncate(const MPoly& p) const {
        MPoly out(p.nvars());
        for (const auto& [m, c] : p.terms()) {
            unsigned zb = 0, z = 0;
            for (size_t v = 0; v < xi_.n; ++v) zb += m[v];
            for (size_t v = xi_.n; v < 2 * xi_.n; ++v) z += m[v];
            if (zb <= zb_cap_ && z <= z_cap_) out.add_term(m, c);
        }
        return out;
    }

    const MPoly& get(const Mono& gamma) {
        auto it = cache_.find(gamma);
        if (it != cache_.end()) return it->second;
        MPoly value(2 * xi_.n);
        if (total(gamma) == 0) {
            value = MPoly::constant(2 * xi_.n, GaussRat::one());
        } else {
            size_t l = 0;
            for (size_t t = 0; t < gamma.size(); ++t)
                if (gamma[t] > 0) l = t;
            Mono prev = gamma;
            --prev[l];
            value = truncate(get(prev) * xi_.xi[l]);
        }
        return cache_.emplace(std::move(gamma), std::move(value)).first->second;
    }

    /// All gamma with nonzero truncated power, found by lattice search.
    std::vector<Mono> useful_gammas(size_t k) {
        std::vector<Mono> out;
        Mono zero(k, 0);
        get(zero);
        walk(zero, 0, out);
        std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
            unsigned ta = total(a), tb = total(b);
            if (ta != tb) return ta < tb;
            return a < b;
        });
        return out;
    }

private:
    void walk(const Mono& gamma, size_t from, std::vector<Mono>& out) {
        out.push_back(gamma);
        for (size_t l = from; l < gamma.size(); ++l) {
            Mono next = gamma;
            ++next[l];
            if (!get(next).is_zero()) walk(next, l, out);
        }
    }

    const XiTable& xi_;
    unsigned zb_cap_, z_cap_;
    std::map<Mono, MPoly> cache_;
};

GaussRat inv_gamma_factorial(const Mono& gamma) {
    mpz_class f = 1;
    for (unsigned e : gamma)
        for (unsigned t = 2; t <= e; ++t) f *= t;
    return GaussRat(mpq_class(1) / mpq_class(f));
}

Mono mono_sum(const Mono& a, const Mono& b) {
    Mono s = a;
    for (size_t v = 0; v < s.size(); ++v) s[v] += b[v];
    return s;
}

}  // namespace

GaussRat a_poly(const Mono& alpha, const Mono& beta, const Mono& gamma, const XiTable& xi) {
    XiPowCache cache(xi, total(alpha), total(beta));
    Mono m = alpha;
    m.insert(m.end(), beta.begin(), beta.end());
    return cache.get(gamma).coeff(m);
}

TangencySystem tangency_system(const ModelSpec& m, const Bounds& b) {
    TangencySystem sys;
    sys.xi = xi_expand(m);
    sys.catalog = build_catalog(m, b);
    sys.mu_max = b.max_z_bound() + sys.xi.max_z_degree();
    sys.nu_max = b.max_z_bound() + sys.xi.max_zbar_degree();

    const size_t n = m.n, k = m.k;
    const RingPtr& ring = sys.catalog.ring;
    XiPowCache cache(sys.xi, sys.nu_max, sys.mu_max);
    std::vector<Mono> gammas = cache.useful_gammas(k);
    for (const Mono& g : gammas) sys.gamma_order_cap = std::max(sys.gamma_order_cap, total(g));

    auto add = [&](size_t j, const Mono& mu, const Mono& nu, const Derivative& d,
                   const GaussRat& c) {
        if (c.is_zero()) return;
        if (total(mu) > sys.mu_max || total(nu) > sys.nu_max) return;
        TangencyKey key{j, mu, nu};
        auto it = sys.equations.find(key);
        if (it == sys.equations.end())
            it = sys.equations.emplace(std::move(key), LinDiffPoly(ring)).first;
        it->second.add_term(d, c);
    };

    // Split a (zbar, z) exponent vector of Xi-products into (alpha, beta).
    auto split = [&](const Mono& mono) {
        return std::make_pair(Mono(mono.begin(), mono.begin() + n),
                              Mono(mono.begin() + n, mono.end()));
    };

    for (size_t j = 0; j < k; ++j) {
        // W^{j,beta'}(wbar + Xi): Taylor shift against every useful gamma.
        for (const Unknown& u : sys.catalog.unknowns) {
            if (!u.is_w || u.comp != j) continue;
            for (const Mono& gamma : gammas) {
                const MPoly& power = cache.get(gamma);
                GaussRat f = inv_gamma_factorial(gamma);
                Derivative d{u.indet, DerivOp(gamma)};
                for (const auto& [mono, c] : power.terms()) {
                    auto [alpha, beta] = split(mono);
                    add(j, mono_sum(u.alpha, beta), alpha, d, f * c);
                }
            }
        }
        // -bar(W^{j,alpha}) at bidegree (0, alpha).
        for (const Unknown& u : sys.catalog.unknowns) {
            if (!u.is_w || u.comp != j) continue;
            Derivative d{ring->bar_of(u.indet), DerivOp::identity(k)};
            add(j, Mono(n, 0), u.alpha, d, -GaussRat::one());
        }
        // -dXi_j/dz_i * Z^i(z, wbar + Xi).
        for (size_t i = 0; i < n; ++i) {
            MPoly dxi = sys.xi.xi[j].derivative(n + i);
            if (dxi.is_zero()) continue;
            for (const Mono& gamma : gammas) {
                MPoly prod = cache.truncate(dxi * cache.get(gamma));
                if (prod.is_zero()) continue;
                GaussRat f = inv_gamma_factorial(gamma);
                for (const Unknown& u : sys.catalog.unknowns) {
                    if (u.is_w || u.comp != i) continue;
                    Derivative d{u.indet, DerivOp(gamma)};
                    for (const auto& [mono, c] : prod.terms()) {
                        auto [alpha, beta] = split(mono);
                        add(j, mono_sum(u.alpha, beta), alpha, d, -f * c);
                    }
                }
            }
        }
        // -dXi_j/dzbar_i * bar(Z^{i,alpha'}).
        for (size_t i = 0; i < n; ++i) {
            MPoly dxib = sys.xi.xi[j].derivative(i);
            if (dxib.is_zero()) continue;
            for (const Unknown& u : sys.catalog.unknowns) {
                if (u.is_w || u.comp != i) continue;
                Derivative d{ring->bar_of(u.indet), DerivOp::identity(k)};
                for (const auto& [mono, c] : dxib.terms()) {
                    auto [alpha, beta] = split(mono);
                    add(j, beta, mono_sum(u.alpha, alpha), d, -c);
                }
            }
        }
    }

    // Drop any term groups that cancelled to zero.
    for (auto it = sys.equations.begin(); it != sys.equations.end();)
        it = it->second.is_zero() ? sys.equations.erase(it) : std::next(it);
    return sys;
}

LinDiffPoly TangencySystem::equation(const TangencyKey& key) const {
    auto it = equations.find(key);
    return it == equations.end() ? LinDiffPoly(catalog.ring) : it->second;
}

std::vector<LinDiffPoly> TangencySystem::all_equations() const {
    std::vector<LinDiffPoly> out;
    out.reserve(equations.size());
    for (const auto& [key, eq] : equations) out.push_back(eq);
    return out;
}

bool TruncationReport::is_killed(int indet_id) const {
    return std::binary_search(killed.begin(), killed.end(), indet_id);
}

std::string TruncationReport::summary() const {
    std::ostringstream os;
    for (int id : killed) os << probe_catalog.ring->display_name(id) << " == 0\n";
    return os.str();
}

TruncationReport truncation_lemma(const ModelSpec& m, const Bounds& b) {
    TangencySystem sys = tangency_system(m, b.raised(1));
    TruncationReport rep;
    rep.probe_catalog = sys.catalog;
    const DiffRing& ring = *sys.catalog.ring;

    std::vector<bool> dead(ring.nindets(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [key, eq] : sys.equations) {
            // Strip known-zero unknowns, then look for a single identity term.
            const Derivative* last = nullptr;
            size_t live = 0;
            for (const auto& [d, c] : eq.terms()) {
                if (dead[d.indet]) continue;
                ++live;
                last = &d;
            }
            if (live != 1 || !eq.constant_part().is_zero()) continue;
            if (!last->op.is_identity()) continue;
            int id = last->indet;
            int rep_id = ring.indet(id).is_barred ? ring.bar_of(id) : id;
            if (!dead[rep_id]) {
                dead[rep_id] = true;
                dead[ring.bar_of(rep_id)] = true;
                changed = true;
            }
        }
    }
    for (size_t id = 0; id < ring.nindets(); ++id)
        if (dead[id] && !ring.indet(id).is_barred) rep.killed.push_back(static_cast<int>(id));
    std::sort(rep.killed.begin(), rep.killed.end());
    return rep;
}

}  // namespace craut
