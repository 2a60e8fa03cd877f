#include "craut/lie.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace craut {

namespace {

unsigned total(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0u); }

// [zbar, z] exponents of a Xi polynomial into the big [z, zbar, wbar] ring.
MPoly xi_to_big(const MPoly& xi, size_t n, size_t k) {
    std::vector<size_t> perm(2 * n);
    for (size_t i = 0; i < n; ++i) {
        perm[i] = n + i;  // zbar_i
        perm[n + i] = i;  // z_i
    }
    return xi.remap(2 * n + k, perm);
}

}  // namespace

bool verify_tangency(const HoloVectorField& X, const ModelSpec& m) {
    if (X.n != m.n || X.k != m.k)
        throw std::invalid_argument("verify_tangency: field does not match the model signature");
    const size_t n = m.n, k = m.k, big = 2 * n + k;

    std::vector<MPoly> sub, barsub;
    for (size_t i = 0; i < n; ++i) sub.push_back(MPoly::variable(big, i));
    for (size_t l = 0; l < k; ++l) {
        MPoly image = MPoly::variable(big, 2 * n + l);
        image += xi_to_big(m.xi[l], n, k);
        sub.push_back(std::move(image));
    }
    for (size_t i = 0; i < n; ++i) barsub.push_back(MPoly::variable(big, n + i));
    for (size_t l = 0; l < k; ++l) barsub.push_back(MPoly::variable(big, 2 * n + l));

    std::vector<MPoly> z_images, zbar_images;
    for (size_t i = 0; i < n; ++i) {
        z_images.push_back(X.z_comp[i].compose(sub));
        zbar_images.push_back(X.z_comp[i].conj_coeffs().compose(barsub));
    }
    for (size_t j = 0; j < k; ++j) {
        MPoly E = X.w_comp[j].compose(sub);
        E -= X.w_comp[j].conj_coeffs().compose(barsub);
        for (size_t i = 0; i < n; ++i) {
            E -= xi_to_big(m.xi[j].derivative(n + i), n, k) * z_images[i];
            E -= xi_to_big(m.xi[j].derivative(i), n, k) * zbar_images[i];
        }
        if (!E.is_zero()) return false;
    }
    return true;
}

void FieldCoords::index_fields(const std::vector<HoloVectorField>& fields) {
    for (const HoloVectorField& X : fields)
        for (size_t c = 0; c < X.n + X.k; ++c)
            for (const auto& [mono, coeff] : X.component(c).terms())
                index_.emplace(std::make_pair(c, mono), 0);
    int next = 0;
    for (auto& [key, id] : index_) id = next++;
}

SparseRow FieldCoords::vectorize(const HoloVectorField& X) const {
    SparseRow row;
    for (size_t c = 0; c < X.n + X.k; ++c)
        for (const auto& [mono, coeff] : X.component(c).terms()) {
            auto it = index_.find({c, mono});
            if (it == index_.end())
                throw std::invalid_argument("vectorize: coordinate outside the indexed space");
            if (sgn(coeff.re()) != 0) row.emplace_back(2 * it->second, coeff.re());
            if (sgn(coeff.im()) != 0) row.emplace_back(2 * it->second + 1, coeff.im());
        }
    std::sort(row.begin(), row.end());
    return row;
}

SparseRow FieldCoords::vectorize_or_extend(const HoloVectorField& X) {
    index_fields({X});
    return vectorize(X);
}

namespace {

void weighted_monos_rec(const std::vector<unsigned>& weights, long cap, Mono& cur, size_t var,
                        std::vector<Mono>& out) {
    if (var == weights.size()) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0;; ++e) {
        long used = static_cast<long>(e) * weights[var];
        if (used > cap) break;
        cur[var] = e;
        weighted_monos_rec(weights, cap - used, cur, var + 1, out);
    }
    cur[var] = 0;
}

// All w-monomials of weighted degree <= cap.
std::vector<Mono> weighted_monos(const std::vector<unsigned>& weights, long cap) {
    std::vector<Mono> out;
    if (cap < 0) return out;
    Mono cur(weights.size(), 0);
    weighted_monos_rec(weights, cap, cur, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

struct Ansatz {
    // Complex column c covers unknown column_unknown[c] at monomial
    // column_mono[c]; real columns are 2c (re) and 2c+1 (im).
    std::vector<size_t> column_unknown;
    std::vector<Mono> column_mono;
    std::vector<std::vector<std::pair<Mono, int>>> per_unknown;  // (sigma, complex col)
};

Ansatz build_ansatz(const UnknownCatalog& cat, const std::vector<unsigned>& weights,
                    const Bounds& b) {
    Ansatz a;
    a.per_unknown.resize(cat.unknowns.size());
    for (size_t u = 0; u < cat.unknowns.size(); ++u) {
        const Unknown& info = cat.unknowns[u];
        long cap = static_cast<long>(info.weight) + static_cast<long>(b.w_bound) -
                   static_cast<long>(total(info.alpha));
        for (const Mono& sigma : weighted_monos(weights, cap)) {
            int col = static_cast<int>(a.column_unknown.size());
            a.column_unknown.push_back(u);
            a.column_mono.push_back(sigma);
            a.per_unknown[u].emplace_back(sigma, col);
        }
    }
    return a;
}

mpq_class falling_factorial(const Mono& sigma, const std::vector<unsigned>& theta) {
    mpz_class f = 1;
    for (size_t l = 0; l < sigma.size(); ++l)
        for (unsigned t = 0; t < theta[l]; ++t) f *= static_cast<long>(sigma[l] - t);
    return mpq_class(f);
}

// Realified scalar rows of one generator applied to the ansatz.
void generator_rows(const LinDiffPoly& g, const UnknownCatalog& cat, const Ansatz& ansatz,
                    std::vector<SparseRow>& out) {
    if (!g.constant_part().is_zero())
        throw std::logic_error("tangency pipeline produced an inhomogeneous generator");
    std::map<Mono, std::map<int, mpq_class>> rows_re, rows_im;
    auto bump = [](std::map<int, mpq_class>& row, int col, const mpq_class& v) {
        if (sgn(v) == 0) return;
        row[col] += v;
    };
    for (const auto& [d, coeff] : g.terms()) {
        bool barred = cat.ring->indet(d.indet).is_barred;
        int rep = barred ? cat.ring->bar_of(d.indet) : d.indet;
        const Unknown* info = cat.by_indet(rep);
        if (!info) throw std::logic_error("generator references an unknown outside the catalog");
        size_t u = info - cat.unknowns.data();
        const auto& theta = d.op.exponents();
        for (const auto& [sigma, col] : ansatz.per_unknown[u]) {
            bool ok = true;
            for (size_t l = 0; l < sigma.size() && ok; ++l) ok = theta[l] <= sigma[l];
            if (!ok) continue;
            mpq_class ff = falling_factorial(sigma, theta);
            mpq_class kre = coeff.re() * ff, kim = coeff.im() * ff;
            Mono tau(sigma.size());
            for (size_t l = 0; l < sigma.size(); ++l) tau[l] = sigma[l] - theta[l];
            auto& rre = rows_re[tau];
            auto& rim = rows_im[tau];
            if (!barred) {
                // k * (p + iq)
                bump(rre, 2 * col, kre);
                bump(rre, 2 * col + 1, -kim);
                bump(rim, 2 * col, kim);
                bump(rim, 2 * col + 1, kre);
            } else {
                // k * (p - iq)
                bump(rre, 2 * col, kre);
                bump(rre, 2 * col + 1, kim);
                bump(rim, 2 * col, kim);
                bump(rim, 2 * col + 1, -kre);
            }
        }
    }
    auto emit = [&](std::map<Mono, std::map<int, mpq_class>>& rows) {
        for (auto& [tau, row] : rows) {
            SparseRow r;
            for (auto& [col, v] : row)
                if (sgn(v) != 0) r.emplace_back(col, std::move(v));
            if (!r.empty()) out.push_back(std::move(r));
        }
    };
    emit(rows_re);
    emit(rows_im);
}

std::vector<HoloVectorField> fields_from_nullspace(const std::vector<SparseRow>& basis,
                                                   const UnknownCatalog& cat,
                                                   const Ansatz& ansatz) {
    std::vector<HoloVectorField> fields;
    const size_t n = cat.n, k = cat.k;
    for (const SparseRow& vec : basis) {
        HoloVectorField X = HoloVectorField::zero(n, k);
        for (const auto& [rcol, value] : vec) {
            int col = rcol / 2;
            bool imag = rcol % 2 != 0;
            const Unknown& info = cat.unknowns[ansatz.column_unknown[col]];
            const Mono& sigma = ansatz.column_mono[col];
            Mono mono(n + k, 0);
            for (size_t i = 0; i < n; ++i) mono[i] = info.alpha[i];
            for (size_t l = 0; l < k; ++l) mono[n + l] = sigma[l];
            GaussRat c = imag ? GaussRat(mpq_class(0), value) : GaussRat(value);
            size_t comp = info.is_w ? n + info.comp : info.comp;
            X.component(comp).add_term(mono, c);
        }
        fields.push_back(std::move(X));
    }
    return fields;
}

}  // namespace

std::vector<HoloVectorField> tangency_solution_basis(const ModelSpec& m, const Bounds& b) {
    TangencySystem sys = tangency_system(m, b);
    Ranking ranking(sys.catalog.ring, RankingKind::orderly, sys.catalog.block_names());
    CanonicalSystem G = lrg(sys.all_equations(), ranking);
    if (G.inconsistent)
        throw std::logic_error("homogeneous tangency system reported inconsistent");

    std::vector<unsigned> weights = model_weights(m);
    Ansatz ansatz = build_ansatz(sys.catalog, weights, b);
    std::vector<SparseRow> rows;
    for (const LinDiffPoly& g : G.generators) generator_rows(g, sys.catalog, ansatz, rows);

    auto null_basis = nullspace(rows, static_cast<int>(2 * ansatz.column_unknown.size()));
    std::vector<HoloVectorField> fields = fields_from_nullspace(null_basis, sys.catalog, ansatz);
    for (const HoloVectorField& X : fields)
        if (!verify_tangency(X, m))
            throw std::logic_error("pipeline produced a non-tangent field (internal error)");
    return fields;
}

LieAlgebraPresentation solve_autcr(const ModelSpec& m, const SolveOptions& opts) {
    DegreeInfo info = degree_bounds(m);
    Bounds bounds = opts.bounds ? *opts.bounds : info.bounds;

    LieAlgebraPresentation lie;
    lie.model = m;
    lie.weights = info.weights;
    lie.bounds = bounds;
    lie.basis = tangency_solution_basis(m, bounds);
    lie.dimension = lie.basis.size();

    if (opts.stabilize) {
        std::vector<HoloVectorField> raised = tangency_solution_basis(m, bounds.raised(1));
        if (raised.size() != lie.dimension)
            throw UnconvergedBounds(lie.dimension, raised.size());
    }

    {
        FieldCoords coords;
        coords.index_fields(lie.basis);
        std::vector<SparseRow> vecs;
        for (const HoloVectorField& X : lie.basis) vecs.push_back(coords.vectorize(X));
        if (rank_of(vecs) != lie.dimension)
            throw std::logic_error("solution basis is not R-linearly independent");
    }

    lie.grading = compute_grading(lie.basis, m, info.weights);
    if (lie.grading.ok) lie.basis = lie.grading.basis;  // weight-sorted presentation
    lie.brackets = structure_constants(lie.basis);
    if (lie.grading.ok) {
        lie.grading.bracket_compatible = true;
        for (const auto& [pair, coeffs] : lie.brackets) {
            int target = lie.grading.field_weight[pair.first] + lie.grading.field_weight[pair.second];
            for (size_t c = 0; c < coeffs.size(); ++c)
                if (sgn(coeffs[c]) != 0 && lie.grading.field_weight[c] != target)
                    lie.grading.bracket_compatible = false;
        }
    }
    return lie;
}

std::map<std::pair<size_t, size_t>, std::vector<mpq_class>> structure_constants(
    const std::vector<HoloVectorField>& basis) {
    std::map<std::pair<size_t, size_t>, std::vector<mpq_class>> table;
    if (basis.empty()) return table;

    std::vector<HoloVectorField> everything = basis;
    std::map<std::pair<size_t, size_t>, HoloVectorField> brackets;
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b) {
            brackets.emplace(std::make_pair(a, b), bracket(basis[a], basis[b]));
            everything.push_back(brackets.at({a, b}));
        }
    FieldCoords coords;
    coords.index_fields(everything);
    std::vector<SparseRow> columns;
    for (const HoloVectorField& X : basis) columns.push_back(coords.vectorize(X));

    for (const auto& [pair, B] : brackets) {
        auto x = solve_in_span(columns, coords.vectorize(B));
        if (!x) throw ClosureError(pair.first, pair.second);
        table.emplace(pair, std::move(*x));
    }
    return table;
}

namespace {

// Weight shift a monomial induces in one component; the field is graded of
// weight d when every monomial of every component shifts by the same d.
long mono_weight(const Mono& mono, size_t comp, size_t n,
                 const std::vector<unsigned>& weights) {
    long w = 0;
    for (size_t i = 0; i < n; ++i) w += mono[i];
    for (size_t l = 0; l + n < mono.size(); ++l) w += static_cast<long>(mono[n + l]) * weights[l];
    long comp_weight = comp < n ? 1 : static_cast<long>(weights[comp - n]);
    return w - comp_weight;
}

std::vector<long> field_weights(const HoloVectorField& X, const std::vector<unsigned>& weights) {
    std::vector<long> out;
    for (size_t c = 0; c < X.n + X.k; ++c)
        for (const auto& [mono, coeff] : X.component(c).terms()) {
            long w = mono_weight(mono, c, X.n, weights);
            if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
        }
    std::sort(out.begin(), out.end());
    return out;
}

HoloVectorField homogeneous_part(const HoloVectorField& X, long weight,
                                 const std::vector<unsigned>& weights) {
    HoloVectorField out = HoloVectorField::zero(X.n, X.k);
    for (size_t c = 0; c < X.n + X.k; ++c)
        for (const auto& [mono, coeff] : X.component(c).terms())
            if (mono_weight(mono, c, X.n, weights) == weight)
                out.component(c).add_term(mono, coeff);
    return out;
}

}  // namespace

GradingResult compute_grading(const std::vector<HoloVectorField>& basis, const ModelSpec& m,
                              const std::vector<unsigned>& weights) {
    GradingResult res;
    if (basis.empty()) {
        res.ok = true;
        res.bracket_compatible = true;
        return res;
    }

    // Candidate homogeneous pieces: the fields themselves when homogeneous,
    // their weighted components otherwise.
    std::vector<std::pair<long, HoloVectorField>> pieces;
    bool split_needed = false;
    for (const HoloVectorField& X : basis) {
        std::vector<long> ws = field_weights(X, weights);
        if (ws.size() == 1) {
            pieces.emplace_back(ws[0], X);
            continue;
        }
        split_needed = true;
        for (long w : ws) pieces.emplace_back(w, homogeneous_part(X, w, weights));
    }

    if (split_needed) {
        // Components of tangent fields need not be tangent unless the model
        // itself is weighted homogeneous; reject escapees.
        for (auto& [w, piece] : pieces)
            if (!verify_tangency(piece, m)) {
                res.failure = "a basis field splits into non-tangent weighted components";
                return res;
            }
    }

    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    // Keep an independent spanning subset, lowest weight first.
    std::vector<HoloVectorField> all;
    for (const auto& [w, piece] : pieces) all.push_back(piece);
    FieldCoords coords;
    coords.index_fields(all);
    std::vector<SparseRow> kept_vecs;
    for (const auto& [w, piece] : pieces) {
        SparseRow v = coords.vectorize(piece);
        kept_vecs.push_back(v);
        if (rank_of(kept_vecs) != kept_vecs.size()) {
            kept_vecs.pop_back();
            continue;
        }
        res.basis.push_back(piece);
        res.field_weight.push_back(static_cast<int>(w));
    }
    if (res.basis.size() != basis.size()) {
        res.failure = "weighted components do not span the algebra";
        res.basis.clear();
        res.field_weight.clear();
        return res;
    }
    for (size_t idx = 0; idx < res.basis.size(); ++idx)
        res.layers[res.field_weight[idx]].push_back(idx + 1);
    res.ok = true;
    return res;
}

bool same_span(const std::vector<HoloVectorField>& basis,
               const std::vector<HoloVectorField>& candidate) {
    std::vector<HoloVectorField> all = basis;
    all.insert(all.end(), candidate.begin(), candidate.end());
    FieldCoords coords;
    coords.index_fields(all);
    std::vector<SparseRow> va, vb, vall;
    for (const HoloVectorField& X : basis) va.push_back(coords.vectorize(X));
    for (const HoloVectorField& X : candidate) vb.push_back(coords.vectorize(X));
    vall = va;
    vall.insert(vall.end(), vb.begin(), vb.end());
    size_t ra = rank_of(va), rb = rank_of(vb);
    return ra == rb && ra == rank_of(vall);
}

std::optional<std::vector<mpq_class>> coordinates_in_basis(
    const std::vector<HoloVectorField>& basis, const HoloVectorField& X) {
    std::vector<HoloVectorField> all = basis;
    all.push_back(X);
    FieldCoords coords;
    coords.index_fields(all);
    std::vector<SparseRow> columns;
    for (const HoloVectorField& B : basis) columns.push_back(coords.vectorize(B));
    return solve_in_span(columns, coords.vectorize(X));
}

std::string render_lie_json(const LieAlgebraPresentation& lie, int indent) {
    nlohmann::ordered_json j;
    if (!lie.model.name.empty()) j["model"] = lie.model.name;
    j["n"] = lie.model.n;
    j["k"] = lie.model.k;
    j["dimension"] = lie.dimension;
    j["weights"] = lie.weights;
    j["basis"] = nlohmann::ordered_json::array();
    for (const HoloVectorField& X : lie.basis) j["basis"].push_back(render_field(X));
    j["brackets"] = nlohmann::ordered_json::array();
    for (const auto& [pair, coeffs] : lie.brackets) {
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const mpq_class& c : coeffs) cs.push_back(c.get_str());
        j["brackets"].push_back({pair.first + 1, pair.second + 1, std::move(cs)});
    }
    j["grading"] = nlohmann::ordered_json::object();
    if (lie.grading.ok) {
        for (const auto& [w, idxs] : lie.grading.layers)
            j["grading"][std::to_string(w)] = idxs;
        j["graded"] = true;
        j["bracket_compatible"] = lie.grading.bracket_compatible;
    } else {
        j["graded"] = false;
        j["grading_failure"] = lie.grading.failure;
    }
    return j.dump(indent) + "\n";
}

namespace {

std::string entry_str(const std::vector<mpq_class>& coeffs) {
    std::string out;
    for (size_t c = 0; c < coeffs.size(); ++c) {
        if (sgn(coeffs[c]) == 0) continue;
        mpq_class v = coeffs[c];
        std::string piece;
        if (v == 1)
            piece = "";
        else if (v == -1)
            piece = "-";
        else
            piece = v.get_str();
        if (!out.empty() && piece.rfind('-', 0) != 0) out += "+";
        out += piece + "X" + std::to_string(c + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string render_bracket_table(const LieAlgebraPresentation& lie) {
    const size_t N = lie.dimension;
    std::vector<std::vector<std::string>> cells(N + 1, std::vector<std::string>(N + 1));
    for (size_t b = 0; b < N; ++b) cells[0][b + 1] = "X" + std::to_string(b + 1);
    for (size_t a = 0; a < N; ++a) {
        cells[a + 1][0] = "X" + std::to_string(a + 1);
        for (size_t b = 0; b < N; ++b) {
            if (a == b)
                cells[a + 1][b + 1] = "0";
            else if (a < b)
                cells[a + 1][b + 1] = entry_str(lie.brackets.at({a, b}));
            else
                cells[a + 1][b + 1] = "*";
        }
    }
    std::vector<size_t> width(N + 1, 0);
    for (const auto& row : cells)
        for (size_t c = 0; c <= N; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (size_t c = 0; c <= N; ++c) {
            os << (c ? " | " : "");
            os << row[c] << std::string(width[c] - row[c].size(), ' ');
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace craut
