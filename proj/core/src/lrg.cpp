#include "craut/lrg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "craut/textio.hpp"

namespace craut {

LinDiffPoly delta_polynomial(const LinDiffPoly& p1, const LinDiffPoly& p2, const Ranking& r) {
    Derivative ld1 = p1.leader(r);
    Derivative ld2 = p2.leader(r);
    if (ld1.indet != ld2.indet) return LinDiffPoly(p1.ring());
    DerivOp theta12 = DerivOp::lcm(ld1.op, ld2.op);
    LinDiffPoly left = p1.derived(ld1.op.quotient_of(theta12)).scaled(p2.initial(r));
    LinDiffPoly right = p2.derived(ld2.op.quotient_of(theta12)).scaled(p1.initial(r));
    return left - right;
}

namespace {

struct Completion {
    const Ranking& r;
    RingPtr ring;
    std::vector<LinDiffPoly> G;
    std::vector<LinDiffPoly> Gbar;       // bar(G[i]), cached
    std::vector<Derivative> ld_plain;    // leaders of G[i]
    std::vector<Derivative> ld_barred;   // leaders of bar(G[i])
    // Persistent divisor index kept in lockstep with G (q_index == position).
    ReducerSet set;
    std::deque<std::pair<size_t, size_t>> pairs;
    bool inconsistent = false;

    Completion(const Ranking& ranking, RingPtr rg)
        : r(ranking), ring(std::move(rg)), set(ranking, /*extended=*/true) {}

    void rebuild_set() {
        set = ReducerSet(r, true);
        for (const LinDiffPoly& g : G) set.add(g);
    }

    // Reduce against the current basis and append a surviving remainder.
    // Generators stay monic but may carry barred leaders: a reality-type
    // generator such as u - bar(u) makes reduction rewrite the unbarred
    // derivatives into the barred representatives, and that is the fixpoint.
    void absorb(const LinDiffPoly& p) {
        if (inconsistent || p.is_zero()) return;
        if (p.is_constant()) {
            inconsistent = true;
            return;
        }
        ReduceResult res = reduce_with(p, set);
        if (res.constant_collapse) {
            inconsistent = true;
            return;
        }
        if (res.remainder.is_zero()) return;
        if (res.remainder.is_constant()) {
            inconsistent = true;
            return;
        }
        G.push_back(res.remainder.monic(r));
        Gbar.push_back(G.back().barred());
        ld_plain.push_back(G.back().leader(r));
        ld_barred.push_back(Gbar.back().leader(r));
        set.add(G.back());
        size_t t = G.size() - 1;
        for (size_t s = 0; s <= t; ++s) pairs.emplace_back(s, t);
    }

    void process_pair(size_t i, size_t j) {
        // All bar combinations of one unordered pair; Delta vanishes unless
        // the leaders share an indeterminate, so most combinations are O(1).
        // The plain i == j case is trivially zero but Delta(g, bar g) is not.
        auto try_delta = [&](const LinDiffPoly& a, const Derivative& la, const LinDiffPoly& b,
                             const Derivative& lb) {
            if (la.indet != lb.indet || inconsistent) return;
            absorb(delta_polynomial(a, b, r));
        };
        if (i != j) try_delta(G[i], ld_plain[i], G[j], ld_plain[j]);
        try_delta(G[i], ld_plain[i], Gbar[j], ld_barred[j]);
        if (i != j) try_delta(Gbar[i], ld_barred[i], G[j], ld_plain[j]);
        try_delta(Gbar[i], ld_barred[i], Gbar[j], ld_barred[j]);
    }

    void drain_pairs() {
        while (!pairs.empty() && !inconsistent) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            process_pair(i, j);
        }
    }

    void autoreduce() {
        bool changed = true;
        while (changed && !inconsistent) {
            changed = false;
            for (size_t i = 0; i < G.size();) {
                ReduceResult res = reduce_with(G[i], set, /*exclude_q=*/i);
                if (res.remainder == G[i]) {
                    ++i;
                    continue;
                }
                changed = true;
                if (res.remainder.is_zero()) {
                    G.erase(G.begin() + static_cast<long>(i));
                    rebuild_set();
                } else if (res.remainder.is_constant()) {
                    inconsistent = true;
                    return;
                } else {
                    G[i] = res.remainder.monic(r);
                    rebuild_set();
                    ++i;
                }
            }
        }
    }
};

}  // namespace

CanonicalSystem lrg(const std::vector<LinDiffPoly>& sigma, const Ranking& r) {
    CanonicalSystem out;
    out.ring = r.ring();
    out.ranking = r;
    if (sigma.empty()) return out;

    Completion st{r, r.ring()};
    // Absorb inputs lowest rank first and complete after each one: redundant
    // members then reduce to zero against an already-completed core instead
    // of seeding generators of their own. Also makes the run independent of
    // the caller's input order.
    std::vector<LinDiffPoly> queue;
    for (const LinDiffPoly& p : sigma) {
        if (p.is_zero()) continue;
        check_same_ring(p.ring() ? p.ring() : r.ring(), r.ring());
        queue.push_back(p);
    }
    std::sort(queue.begin(), queue.end(), [&](const LinDiffPoly& a, const LinDiffPoly& b) {
        bool ca = a.is_constant(), cb = b.is_constant();
        if (ca != cb) return ca;  // constants first: fastest inconsistency exit
        if (!ca) {
            int c = r.compare(a.leader(r), b.leader(r));
            if (c != 0) return c < 0;
        }
        return LinDiffPoly::structural_less(a, b);
    });
    for (const LinDiffPoly& p : queue) {
        st.absorb(p);
        st.drain_pairs();
        if (st.inconsistent) break;
    }
    if (!st.inconsistent) st.autoreduce();

    if (st.inconsistent) {
        out.inconsistent = true;
        out.generators = {LinDiffPoly::constant(out.ring, GaussRat::one())};
        return out;
    }
    std::sort(st.G.begin(), st.G.end(), [&](const LinDiffPoly& a, const LinDiffPoly& b) {
        int c = r.compare(a.leader(r), b.leader(r));
        if (c != 0) return c < 0;
        return LinDiffPoly::structural_less(a, b);
    });
    st.G.erase(std::unique(st.G.begin(), st.G.end()), st.G.end());
    out.generators = std::move(st.G);
    return out;
}

bool ideal_membership(const LinDiffPoly& p, const CanonicalSystem& G) {
    if (G.inconsistent) return true;
    if (p.is_zero()) return true;
    ReduceResult res = extended_ritt_reduce(p, G.generators, G.ranking);
    return res.remainder.is_zero();
}

namespace {

void enumerate_ops(size_t nvars, unsigned bound, std::vector<unsigned>& cur, size_t var,
                   unsigned used, std::vector<DerivOp>& out) {
    if (var == nvars) {
        out.emplace_back(cur);
        return;
    }
    for (unsigned e = 0; e + used <= bound; ++e) {
        cur[var] = e;
        enumerate_ops(nvars, bound, cur, var + 1, used + e, out);
    }
    cur[var] = 0;
}

std::vector<DerivOp> all_ops_up_to(size_t nvars, unsigned bound) {
    std::vector<DerivOp> out;
    std::vector<unsigned> cur(nvars, 0);
    enumerate_ops(nvars, bound, cur, 0, 0, out);
    return out;
}

// Leader exponents of G and bar(G), grouped by indeterminate.
std::vector<std::vector<DerivOp>> leader_stairs(const CanonicalSystem& G) {
    std::vector<std::vector<DerivOp>> stairs(G.ring->nindets());
    for (const LinDiffPoly& g : G.generators) {
        Derivative ld = g.leader(G.ranking);
        stairs[ld.indet].push_back(ld.op);
        Derivative bld = g.barred().leader(G.ranking);
        stairs[bld.indet].push_back(bld.op);
    }
    return stairs;
}

bool on_stairs(const std::vector<DerivOp>& stairs, const DerivOp& op) {
    for (const DerivOp& s : stairs)
        if (s.divides(op)) return true;
    return false;
}

}  // namespace

std::vector<Derivative> parametric_derivatives(const CanonicalSystem& G, unsigned order_bound) {
    std::vector<Derivative> out;
    if (G.inconsistent) return out;
    auto stairs = leader_stairs(G);
    auto ops = all_ops_up_to(G.ring->nderivations(), order_bound);
    std::sort(ops.begin(), ops.end());
    for (int id = 0; id < static_cast<int>(G.ring->nindets()); ++id)
        for (const DerivOp& op : ops)
            if (!on_stairs(stairs[id], op)) out.push_back(Derivative{id, op});
    return out;
}

namespace {

using LinForm = std::map<std::string, GaussRat>;  // parameter name -> coefficient

void linform_add(LinForm& f, const std::string& key, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = f.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

// Full remainder of one derivative, as a linear form over parameter names.
LinForm derivative_value(const CanonicalSystem& G, const Derivative& d,
                         std::map<Derivative, LinForm>& memo) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    LinDiffPoly p = LinDiffPoly::term(G.ring, d, GaussRat::one());
    ReduceResult res = extended_ritt_reduce(p, G.generators, G.ranking);
    LinForm f;
    for (const auto& [pd, c] : res.remainder.terms())
        linform_add(f, render_derivative(*G.ring, pd), c);
    linform_add(f, "1", res.remainder.constant_part());
    memo[d] = f;
    return f;
}

GaussRat factorial_of(const DerivOp& op) {
    mpz_class f = 1;
    for (unsigned e : op.exponents())
        for (unsigned t = 2; t <= e; ++t) f *= t;
    return GaussRat(mpq_class(f));
}

}  // namespace

SeriesSolution power_series_solution(const CanonicalSystem& G, unsigned order) {
    if (G.inconsistent) throw std::domain_error("power series of an inconsistent system");
    SeriesSolution out;
    out.order = order;
    for (const Derivative& d : parametric_derivatives(G, order))
        out.parameters.push_back(render_derivative(*G.ring, d));

    std::map<Derivative, LinForm> memo;
    auto ops = all_ops_up_to(G.ring->nderivations(), order);
    std::sort(ops.begin(), ops.end());
    for (int id = 0; id < static_cast<int>(G.ring->nindets()); ++id) {
        std::vector<SeriesTerm> terms;
        for (const DerivOp& op : ops) {
            LinForm v = derivative_value(G, Derivative{id, op}, memo);
            GaussRat inv_fact = GaussRat::one() / factorial_of(op);
            for (const auto& [param, c] : v)
                terms.push_back({op.exponents(), param, c * inv_fact});
        }
        out.series.emplace_back(G.ring->display_name(id), std::move(terms));
    }
    return out;
}

std::string render_series_json(const SeriesSolution& s, int indent) {
    nlohmann::ordered_json j;
    j["order"] = s.order;
    j["parameters"] = s.parameters;
    j["series"] = nlohmann::ordered_json::object();
    for (const auto& [name, terms] : s.series) {
        auto arr = nlohmann::ordered_json::array();
        for (const SeriesTerm& t : terms)
            arr.push_back({{"monomial", t.monomial},
                           {"parameter", t.parameter},
                           {"coefficient", t.coefficient.str()}});
        j["series"][name] = std::move(arr);
    }
    return j.dump(indent) + "\n";
}

bool series_satisfies(const SeriesSolution& s, const CanonicalSystem& G, const LinDiffPoly& p,
                      unsigned check_order) {
    // Taylor values read back from the series data itself:
    // value(u at sigma) = sigma! * [x^sigma] u.
    std::map<std::pair<std::string, std::vector<unsigned>>, LinForm> values;
    for (const auto& [name, terms] : s.series)
        for (const SeriesTerm& t : terms) {
            DerivOp op{t.monomial};
            linform_add(values[{name, t.monomial}], t.parameter, t.coefficient * factorial_of(op));
        }

    unsigned max_op = 0;
    for (const auto& [d, c] : p.terms()) max_op = std::max(max_op, d.op.order());
    if (max_op > s.order) return true;  // nothing checkable at this truncation
    unsigned top = std::min(check_order, s.order - max_op);

    for (const DerivOp& sigma : all_ops_up_to(G.ring->nderivations(), top)) {
        LinForm total;
        for (const auto& [d, c] : p.terms()) {
            DerivOp at = d.op.times(sigma);
            auto it = values.find({G.ring->display_name(d.indet), at.exponents()});
            if (it != values.end())
                for (const auto& [param, k] : it->second) linform_add(total, param, k * c);
        }
        if (sigma.is_identity()) linform_add(total, "1", p.constant_part());
        if (!total.empty()) return false;
    }
    return true;
}

}  // namespace craut
