// craut: exact differential-algebra toolkit for Lie algebras of
// infinitesimal CR-automorphisms of rigid models.
//
// Subcommands: reduce | lrg | tangency | autcr | bracket-table.
// Exit codes: 0 success, 1 usage/parse error, 2 model validation error,
// 3 inconsistent system, 4 unconverged degree bounds.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "craut/lie.hpp"
#include "craut/lrg.hpp"
#include "craut/model.hpp"
#include "craut/tangency.hpp"
#include "craut/textio.hpp"

namespace {

using namespace craut;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitModel = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitUnconverged = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int check_threads_env() {
    const char* env = std::getenv("CRAUT_THREADS");
    if (!env) return kExitOk;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
        std::cerr << "error: CRAUT_THREADS must be a positive integer\n";
        return kExitUsage;
    }
    // The engine is sequential and deterministic; any positive cap is honored.
    return kExitOk;
}

struct CommonOpts {
    std::string format = "text";
    std::string ranking = "orderly";
    std::string blocks;
};

Ranking make_ranking(const RingPtr& ring, const CommonOpts& c, const Ranking& fallback) {
    RankingKind kind = c.ranking == "elim" || c.ranking == "elimination"
                           ? RankingKind::elimination
                           : RankingKind::orderly;
    std::vector<std::string> blocks =
        c.blocks.empty() ? fallback.blocks() : split_commas(c.blocks);
    return Ranking(ring, kind, blocks);
}

struct ReduceArgs {
    std::string system_path;
    std::string poly;
    std::vector<std::string> divisors;
    std::string derivations;
    std::string unknowns;
    bool real = false;
    bool extended = false;
    CommonOpts common;
};

int run_reduce(const ReduceArgs& a) {
    SystemDoc doc;
    if (!a.system_path.empty()) {
        doc = parse_system_json(slurp(a.system_path));
    } else {
        if (a.derivations.empty() || a.unknowns.empty())
            throw std::invalid_argument(
                "reduce needs a system file or --derivations and --unknowns");
        auto ring = std::make_shared<DiffRing>();
        for (const std::string& d : split_commas(a.derivations)) ring->add_derivation(d);
        for (const std::string& u : split_commas(a.unknowns)) {
            if (a.real)
                ring->add_real_unknown(u);
            else
                ring->add_tagged_unknown(u);
        }
        doc.ring = ring;
        doc.ranking = Ranking(ring, RankingKind::orderly);
    }
    Ranking ranking = make_ranking(doc.ring, a.common, doc.ranking);

    std::vector<LinDiffPoly> Q;
    if (!a.divisors.empty())
        for (const std::string& q : a.divisors) Q.push_back(parse_poly(q, doc.ring));
    else
        Q = doc.equations;
    LinDiffPoly p = parse_poly(a.poly, doc.ring);

    ReduceResult res = a.extended ? extended_ritt_reduce(p, Q, ranking)
                                  : ritt_reduce(p, Q, ranking);
    bool irreducible = is_reduced_against(res.remainder, Q, ranking, a.extended);

    if (a.common.format == "json") {
        nlohmann::ordered_json j;
        j["divisors"] = nlohmann::ordered_json::array();
        for (const LinDiffPoly& q : Q) j["divisors"].push_back(render_poly(q));
        j["remainder"] = render_poly(res.remainder);
        j["certificate"] = nlohmann::ordered_json::array();
        for (const CertEntry& e : res.certificate)
            j["certificate"].push_back({{"q", e.q_index + 1},
                                        {"bar", e.barred},
                                        {"theta", e.theta.exponents()},
                                        {"coeff", e.coeff.str()}});
        j["constant_collapse"] = res.constant_collapse;
        j["irreducible"] = irreducible;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "divisors:\n";
    for (size_t i = 0; i < Q.size(); ++i)
        std::cout << "  q" << i + 1 << ": " << render_poly(Q[i]) << "\n";
    std::cout << "remainder: " << render_poly(res.remainder) << "\n";
    std::cout << "certificate:\n";
    for (const CertEntry& e : res.certificate) {
        std::cout << "  " << e.coeff.str() << " * d[";
        const auto& exps = e.theta.exponents();
        for (size_t t = 0; t < exps.size(); ++t) std::cout << (t ? "," : "") << exps[t];
        std::cout << "] * " << (e.barred ? "bar(q" : "q") << e.q_index + 1
                  << (e.barred ? ")" : "") << "\n";
    }
    if (res.constant_collapse)
        std::cout << "note: divisor set contains a nonzero constant (inconsistent system)\n";
    std::cout << "irreducible: " << (irreducible ? "yes" : "no") << "\n";
    return kExitOk;
}

struct LrgArgs {
    std::string system_path;
    int series = -1;
    CommonOpts common;
};

int run_lrg(const LrgArgs& a) {
    SystemDoc doc = parse_system_json(slurp(a.system_path));
    Ranking ranking = make_ranking(doc.ring, a.common, doc.ranking);
    CanonicalSystem G = lrg(doc.equations, ranking);

    SystemDoc out;
    out.ring = G.ring;
    out.ranking = G.ranking;
    out.equations = G.generators;
    out.inconsistent = G.inconsistent;

    if (a.common.format == "json") {
        std::cout << render_system_json(out, /*as_canonical=*/true);
    } else {
        std::cout << "canonical system (" << G.generators.size() << " generators)"
                  << (G.inconsistent ? " [inconsistent]" : "") << ":\n";
        for (const LinDiffPoly& g : G.generators) std::cout << "  " << render_poly(g) << "\n";
    }
    if (a.series >= 0 && !G.inconsistent) {
        SeriesSolution s = power_series_solution(G, static_cast<unsigned>(a.series));
        if (a.common.format == "json") {
            std::cout << render_series_json(s);
        } else {
            std::cout << "power series solution to order " << a.series << ":\n";
            for (const auto& [name, terms] : s.series) {
                std::cout << "  " << name << " = ";
                bool first = true;
                for (const SeriesTerm& t : terms) {
                    std::string mono;
                    for (size_t v = 0; v < t.monomial.size(); ++v) {
                        if (t.monomial[v] == 0) continue;
                        mono += "*" + G.ring->derivation_name(v);
                        if (t.monomial[v] > 1) mono += "^" + std::to_string(t.monomial[v]);
                    }
                    std::cout << (first ? "" : " + ") << t.coefficient.str() << "*{" << t.parameter
                              << "}" << mono;
                    first = false;
                }
                if (first) std::cout << "0";
                std::cout << "\n";
            }
        }
    }
    return G.inconsistent ? kExitInconsistent : kExitOk;
}

struct ModelArgs {
    std::string model_path;
    int deg_z = -1;
    int deg_w = -1;
    bool no_stabilize = false;
    std::string index;
    CommonOpts common;
};

ModelSpec load_checked_model(const std::string& path) {
    ModelSpec m = load_model_file(path);
    std::vector<std::string> errs = validate_model(m);
    if (!errs.empty()) {
        std::cerr << "model validation failed:\n";
        for (const std::string& e : errs) std::cerr << "  - " << e << "\n";
        std::exit(kExitModel);
    }
    return m;
}

Bounds bounds_for(const ModelSpec& m, const ModelArgs& a) {
    Bounds b = degree_bounds(m).bounds;
    if (a.deg_z >= 0) {
        for (unsigned& e : b.z_bound_Z) e = static_cast<unsigned>(a.deg_z);
        for (unsigned& e : b.z_bound_W) e = static_cast<unsigned>(a.deg_z);
    }
    if (a.deg_w >= 0) b.w_bound = static_cast<unsigned>(a.deg_w);
    return b;
}

int run_tangency(const ModelArgs& a) {
    ModelSpec m = load_checked_model(a.model_path);
    Bounds b = bounds_for(m, a);
    TangencySystem sys = tangency_system(m, b);

    if (!a.index.empty()) {
        if (m.n != 1) throw std::invalid_argument("--index is supported for n = 1 models");
        std::vector<std::string> parts = split_commas(a.index);
        if (parts.size() != 3) throw std::invalid_argument("--index expects j,mu,nu");
        TangencyKey key{static_cast<size_t>(std::stoul(parts[0]) - 1),
                        Mono{static_cast<unsigned>(std::stoul(parts[1]))},
                        Mono{static_cast<unsigned>(std::stoul(parts[2]))}};
        std::cout << render_poly(sys.equation(key)) << "\n";
        return kExitOk;
    }

    if (a.common.format == "json") {
        nlohmann::ordered_json j;
        j["model"] = m.name;
        j["mu_max"] = sys.mu_max;
        j["nu_max"] = sys.nu_max;
        j["gamma_order_cap"] = sys.gamma_order_cap;
        j["unknowns"] = nlohmann::ordered_json::array();
        for (const Unknown& u : sys.catalog.unknowns)
            j["unknowns"].push_back(sys.catalog.ring->indet(u.indet).name);
        j["equations"] = nlohmann::ordered_json::array();
        for (const auto& [key, eq] : sys.equations)
            j["equations"].push_back(
                {{"j", key.j + 1}, {"mu", key.mu}, {"nu", key.nu}, {"eq", render_poly(eq)}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "tangency system: " << sys.equations.size() << " equations, "
                  << sys.catalog.unknowns.size() << " unknowns (gamma order cap "
                  << sys.gamma_order_cap << ")\n";
        for (const auto& [key, eq] : sys.equations) {
            std::cout << "(";
            for (size_t v = 0; v < key.mu.size(); ++v) std::cout << (v ? " " : "") << key.mu[v];
            std::cout << ",";
            for (size_t v = 0; v < key.nu.size(); ++v) std::cout << (v ? " " : "") << key.nu[v];
            std::cout << ":W" << key.j + 1 << "): " << render_poly(eq) << "\n";
        }
    }
    return kExitOk;
}

int run_autcr(const ModelArgs& a, bool table_only) {
    ModelSpec m = load_checked_model(a.model_path);
    SolveOptions opts;
    opts.bounds = bounds_for(m, a);
    opts.stabilize = !a.no_stabilize;
    LieAlgebraPresentation lie;
    try {
        lie = solve_autcr(m, opts);
    } catch (const UnconvergedBounds& e) {
        std::cerr << "unconverged: dimension " << e.dim_base << " at the given bounds, "
                  << e.dim_raised << " with bounds raised by one\n";
        return kExitUnconverged;
    }
    if (table_only) {
        std::cout << render_bracket_table(lie);
        return kExitOk;
    }
    if (a.common.format == "json") {
        std::cout << render_lie_json(lie);
        return kExitOk;
    }
    std::cout << "dimension: " << lie.dimension << "\n";
    std::cout << "weights (w1..w" << lie.model.k << "):";
    for (unsigned w : lie.weights) std::cout << " " << w;
    std::cout << "\nbasis:\n";
    for (size_t i = 0; i < lie.basis.size(); ++i)
        std::cout << "  X" << i + 1 << " = " << render_field(lie.basis[i]) << "\n";
    if (lie.grading.ok) {
        std::cout << "grading:\n";
        for (const auto& [w, idxs] : lie.grading.layers) {
            std::cout << "  g[" << w << "] = <";
            for (size_t t = 0; t < idxs.size(); ++t)
                std::cout << (t ? ", " : "") << "X" << idxs[t];
            std::cout << ">\n";
        }
    } else {
        std::cout << "grading: unavailable (" << lie.grading.failure << ")\n";
    }
    std::cout << "bracket table:\n" << render_bracket_table(lie);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    int env_rc = check_threads_env();
    if (env_rc != kExitOk) return env_rc;

    CLI::App app{"exact differential algebra for CR-automorphism Lie algebras"};
    app.require_subcommand(1);

    ReduceArgs red;
    CLI::App* reduce = app.add_subcommand("reduce", "Ritt / extended Ritt reduction");
    reduce->add_option("system", red.system_path, "system file providing ring and divisors");
    reduce->add_option("-p,--poly", red.poly, "differential polynomial to reduce")->required();
    reduce->add_option("-q,--divisor", red.divisors, "divisor polynomial (repeatable)");
    reduce->add_option("--derivations", red.derivations, "comma-separated derivation names");
    reduce->add_option("--unknowns", red.unknowns, "comma-separated unknown names");
    reduce->add_flag("--real", red.real, "unknowns are self-conjugate");
    reduce->add_flag("--extended", red.extended, "extended reduction (bar divisors admitted)");
    reduce->add_option("--ranking", red.common.ranking, "orderly|elim");
    reduce->add_option("--blocks", red.common.blocks, "block order, highest first");
    reduce->add_option("--format", red.common.format, "text|json");

    LrgArgs lrg_args;
    CLI::App* lrg_cmd = app.add_subcommand("lrg", "LinCons Rosenfeld-Groebner completion");
    lrg_cmd->add_option("system", lrg_args.system_path, "system file")->required();
    lrg_cmd->add_option("--series", lrg_args.series, "also print power series to this order");
    lrg_cmd->add_option("--ranking", lrg_args.common.ranking, "orderly|elim");
    lrg_cmd->add_option("--blocks", lrg_args.common.blocks, "block order, highest first");
    lrg_cmd->add_option("--format", lrg_args.common.format, "text|json");

    ModelArgs tan;
    CLI::App* tangency = app.add_subcommand("tangency", "emit the tangency PDE system");
    tangency->add_option("-m,--model", tan.model_path, "model file")->required();
    tangency->add_option("--deg-z", tan.deg_z, "override z-degree bounds");
    tangency->add_option("--deg-w", tan.deg_w, "override the weighted w bound");
    tangency->add_option("--index", tan.index, "print one equation: j,mu,nu (1-based j)");
    tangency->add_option("--format", tan.common.format, "text|json");

    ModelArgs aut;
    CLI::App* autcr = app.add_subcommand("autcr", "compute the CR-automorphism Lie algebra");
    autcr->add_option("-m,--model", aut.model_path, "model file")->required();
    autcr->add_option("--deg-z", aut.deg_z, "override z-degree bounds");
    autcr->add_option("--deg-w", aut.deg_w, "override the weighted w bound");
    autcr->add_flag("--no-stabilize", aut.no_stabilize, "skip the bounds+1 stabilization check");
    autcr->add_option("--format", aut.common.format, "text|json");

    ModelArgs tab;
    CLI::App* table = app.add_subcommand("bracket-table", "print the commutator table");
    table->add_option("-m,--model", tab.model_path, "model file")->required();
    table->add_option("--deg-z", tab.deg_z, "override z-degree bounds");
    table->add_option("--deg-w", tab.deg_w, "override the weighted w bound");
    table->add_flag("--no-stabilize", tab.no_stabilize, "skip the stabilization check");

    try {
        app.parse(argc, argv);
        if (reduce->parsed()) return run_reduce(red);
        if (lrg_cmd->parsed()) return run_lrg(lrg_args);
        if (tangency->parsed()) return run_tangency(tan);
        if (autcr->parsed()) return run_autcr(aut, false);
        if (table->parsed()) return run_autcr(tab, true);
    } catch (const CLI::ParseError& e) {
        std::exit(app.exit(e) == 0 ? kExitOk : kExitUsage);
    } catch (const craut::UnconvergedBounds& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnconverged;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
