#include "support/oracle.hpp"

#include <map>
#include <numeric>

#include "craut/linsolve.hpp"

namespace craut::testing {

namespace {

unsigned total(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0u); }

void monos_rec(size_t nvars, unsigned bound, Mono& cur, size_t var, unsigned used,
               std::vector<Mono>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e + used <= bound; ++e) {
        cur[var] = e;
        monos_rec(nvars, bound, cur, var + 1, used + e, out);
    }
    cur[var] = 0;
}

std::vector<Mono> monos_up_to(size_t nvars, unsigned bound) {
    std::vector<Mono> out;
    Mono cur(nvars, 0);
    monos_rec(nvars, bound, cur, 0, 0, out);
    return out;
}

void wmonos_rec(const std::vector<unsigned>& weights, long cap, Mono& cur, size_t var,
                std::vector<Mono>& out) {
    if (var == weights.size()) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0;; ++e) {
        long used = static_cast<long>(e) * weights[var];
        if (used > cap) break;
        cur[var] = e;
        wmonos_rec(weights, cap - used, cur, var + 1, out);
    }
    cur[var] = 0;
}

std::vector<Mono> weighted_monos(const std::vector<unsigned>& weights, long cap) {
    std::vector<Mono> out;
    if (cap < 0) return out;
    Mono cur(weights.size(), 0);
    wmonos_rec(weights, cap, cur, 0, out);
    return out;
}

}  // namespace

std::vector<HoloVectorField> brute_force_autcr(const ModelSpec& m, const Bounds& b) {
    const size_t n = m.n, k = m.k, big = 2 * n + k;
    std::vector<unsigned> weights = model_weights(m);

    // Variables of the expansion ring: [z_1..z_n, zbar_1..zbar_n, wbar_1..wbar_k].
    // Xi polynomials arrive over [zbar, z]; rewire them into the big ring.
    std::vector<size_t> perm(2 * n);
    for (size_t i = 0; i < n; ++i) {
        perm[i] = n + i;
        perm[n + i] = i;
    }
    std::vector<MPoly> xi_big;
    for (const MPoly& xi : m.xi) xi_big.push_back(xi.remap(big, perm));

    // Substituted coordinate functions w_l -> wbar_l + Xi_l and their powers.
    std::map<std::pair<size_t, unsigned>, MPoly> pow_cache;
    auto w_power = [&](size_t l, unsigned e) -> const MPoly& {
        auto key = std::make_pair(l, e);
        auto it = pow_cache.find(key);
        if (it == pow_cache.end()) {
            MPoly base = MPoly::variable(big, 2 * n + l) + xi_big[l];
            it = pow_cache.emplace(key, base.pow(e)).first;
        }
        return it->second;
    };
    auto substituted_monomial = [&](const Mono& alpha, const Mono& sigma) {
        MPoly out = MPoly::constant(big, GaussRat::one());
        Mono zpart(big, 0);
        for (size_t i = 0; i < n; ++i) zpart[i] = alpha[i];
        out = MPoly::monomial(big, zpart, GaussRat::one());
        for (size_t l = 0; l < k; ++l)
            if (sigma[l] > 0) out = out * w_power(l, sigma[l]);
        return out;
    };
    auto barred_monomial = [&](const Mono& alpha, const Mono& sigma) {
        Mono mono(big, 0);
        for (size_t i = 0; i < n; ++i) mono[n + i] = alpha[i];
        for (size_t l = 0; l < k; ++l) mono[2 * n + l] = sigma[l];
        return MPoly::monomial(big, mono, GaussRat::one());
    };

    // Generic ansatz: complex coefficient per (component, z-mono, w-mono).
    struct Col {
        size_t comp;  // 0..n-1 z components, n..n+k-1 w components
        Mono alpha;
        Mono sigma;
    };
    std::vector<Col> cols;
    for (size_t comp = 0; comp < n + k; ++comp) {
        unsigned zb = comp < n ? b.z_bound_Z[comp] : b.z_bound_W[comp - n];
        unsigned cw = comp < n ? 1 : weights[comp - n];
        for (const Mono& alpha : monos_up_to(n, zb)) {
            long cap = static_cast<long>(cw) + static_cast<long>(b.w_bound) -
                       static_cast<long>(total(alpha));
            for (const Mono& sigma : weighted_monos(weights, cap))
                cols.push_back({comp, alpha, sigma});
        }
    }

    // Rows: coefficient of every (z, zbar, wbar) monomial of every equation,
    // realified (column 2c is Re a_c, column 2c+1 is Im a_c).
    std::map<std::pair<size_t, Mono>, std::map<int, mpq_class>> rows_re, rows_im;
    auto accumulate = [&](size_t j, const MPoly& poly, size_t c, bool conjugated) {
        for (const auto& [mono, coeff] : poly.terms()) {
            auto key = std::make_pair(j, mono);
            auto& rre = rows_re[key];
            auto& rim = rows_im[key];
            const mpq_class& kre = coeff.re();
            const mpq_class& kim = coeff.im();
            if (!conjugated) {
                rre[2 * static_cast<int>(c)] += kre;
                rre[2 * static_cast<int>(c) + 1] += -kim;
                rim[2 * static_cast<int>(c)] += kim;
                rim[2 * static_cast<int>(c) + 1] += kre;
            } else {
                rre[2 * static_cast<int>(c)] += kre;
                rre[2 * static_cast<int>(c) + 1] += kim;
                rim[2 * static_cast<int>(c)] += kim;
                rim[2 * static_cast<int>(c) + 1] += -kre;
            }
        }
    };

    for (size_t c = 0; c < cols.size(); ++c) {
        const Col& col = cols[c];
        MPoly plus = substituted_monomial(col.alpha, col.sigma);
        MPoly minus = barred_monomial(col.alpha, col.sigma);
        if (col.comp >= n) {
            size_t l = col.comp - n;
            accumulate(l, plus, c, false);
            accumulate(l, -minus, c, true);
        } else {
            size_t i = col.comp;
            for (size_t j = 0; j < k; ++j) {
                MPoly dz = xi_big[j].derivative(i);          // dXi_j/dz_i
                MPoly dzb = xi_big[j].derivative(n + i);     // dXi_j/dzbar_i
                if (!dz.is_zero()) accumulate(j, -(dz * plus), c, false);
                if (!dzb.is_zero()) accumulate(j, -(dzb * minus), c, true);
            }
        }
    }

    std::vector<SparseRow> rows;
    auto emit = [&](std::map<std::pair<size_t, Mono>, std::map<int, mpq_class>>& src) {
        for (auto& [key, row] : src) {
            SparseRow r;
            for (auto& [colid, v] : row)
                if (sgn(v) != 0) r.emplace_back(colid, std::move(v));
            if (!r.empty()) rows.push_back(std::move(r));
        }
    };
    emit(rows_re);
    emit(rows_im);

    auto null_basis = nullspace(rows, static_cast<int>(2 * cols.size()));
    std::vector<HoloVectorField> fields;
    for (const SparseRow& vec : null_basis) {
        HoloVectorField X = HoloVectorField::zero(n, k);
        for (const auto& [rcol, value] : vec) {
            const Col& col = cols[rcol / 2];
            Mono mono(n + k, 0);
            for (size_t i = 0; i < n; ++i) mono[i] = col.alpha[i];
            for (size_t l = 0; l < k; ++l) mono[n + l] = col.sigma[l];
            GaussRat cf = rcol % 2 ? GaussRat(mpq_class(0), value) : GaussRat(value);
            X.component(col.comp).add_term(mono, cf);
        }
        fields.push_back(std::move(X));
    }
    return fields;
}

}  // namespace craut::testing
