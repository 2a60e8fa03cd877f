#include "craut/model.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace craut {

namespace {

Mono zbar_part(const Mono& m, size_t n) { return Mono(m.begin(), m.begin() + n); }
Mono z_part(const Mono& m, size_t n) { return Mono(m.begin() + n, m.end()); }

}  // namespace

std::vector<std::string> validate_model(const ModelSpec& m) {
    std::vector<std::string> errs;
    if (m.n == 0) errs.push_back("CR dimension n must be positive");
    if (m.k == 0) errs.push_back("codimension k must be positive");
    if (m.xi.size() != m.k)
        errs.push_back("expected " + std::to_string(m.k) + " defining equations, got " +
                       std::to_string(m.xi.size()));
    for (size_t j = 0; j < m.xi.size(); ++j) {
        const MPoly& xi = m.xi[j];
        std::string tag = "Xi_" + std::to_string(j + 1);
        if (xi.nvars() != 2 * m.n) {
            errs.push_back(tag + ": expected a polynomial in (zbar, z)");
            continue;
        }
        if (xi.is_zero()) {
            errs.push_back(tag + ": identically zero defining function");
            continue;
        }
        for (const auto& [mono, c] : xi.terms()) {
            unsigned deg = 0;
            for (unsigned e : mono) deg += e;
            if (deg == 0) errs.push_back(tag + ": nonzero constant term");
            if (deg == 1) errs.push_back(tag + ": nonzero linear term (Xi must be O(2))");
        }
        // Reality of w_j - bar(w_j) = Xi_j: Xi_{beta,alpha} = -conj(Xi_{alpha,beta}).
        for (const auto& [mono, c] : xi.terms()) {
            Mono swapped = z_part(mono, m.n);
            Mono zb = zbar_part(mono, m.n);
            swapped.insert(swapped.end(), zb.begin(), zb.end());
            if (!(xi.coeff(swapped) == -c.conj())) {
                errs.push_back(tag + ": reality symmetry fails at zbar^alpha z^beta term");
                break;
            }
        }
    }
    return errs;
}

GaussRat XiTable::coeff(size_t j, const Mono& alpha, const Mono& beta) const {
    Mono m = alpha;
    m.insert(m.end(), beta.begin(), beta.end());
    return xi.at(j).coeff(m);
}

unsigned XiTable::max_z_degree() const {
    unsigned d = 0;
    for (const MPoly& p : xi)
        for (const auto& [m, c] : p.terms()) {
            unsigned z = 0;
            for (size_t v = n; v < 2 * n; ++v) z += m[v];
            d = std::max(d, z);
        }
    return d;
}

unsigned XiTable::max_zbar_degree() const {
    unsigned d = 0;
    for (const MPoly& p : xi)
        for (const auto& [m, c] : p.terms()) {
            unsigned z = 0;
            for (size_t v = 0; v < n; ++v) z += m[v];
            d = std::max(d, z);
        }
    return d;
}

XiTable xi_expand(const ModelSpec& m) {
    std::vector<std::string> errs = validate_model(m);
    if (!errs.empty()) {
        std::string msg = "invalid model";
        for (const std::string& e : errs) msg += "\n  - " + e;
        throw std::invalid_argument(msg);
    }
    return XiTable{m.n, m.k, m.xi};
}

std::vector<unsigned> model_weights(const ModelSpec& m) {
    std::vector<unsigned> w;
    w.reserve(m.k);
    for (const MPoly& xi : m.xi) w.push_back(xi.total_degree());
    return w;
}

namespace {

struct XiLexer {
    const std::string& s;
    size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("Xi parse error near '" + s.substr(pos, 8) + "': " + what);
    }
    unsigned integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
    }
    std::string rational() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return s.substr(start, pos - start);
    }
};

}  // namespace

MPoly parse_xi_dsl(const std::string& text, size_t n) {
    XiLexer lx{text};
    MPoly out(2 * n);
    bool first = true;
    if (lx.eof()) lx.fail("empty expression");
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++lx.pos;
        } else if (!first) {
            lx.fail("expected '+' or '-'");
        }
        first = false;

        GaussRat coeff = sign < 0 ? -GaussRat::one() : GaussRat::one();
        Mono mono(2 * n, 0);
        bool any = false;
        while (true) {
            lx.skip_ws();
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                coeff *= GaussRat::parse(lx.rational());
            } else if (f == 'i' &&
                       (lx.pos + 1 >= lx.s.size() ||
                        !std::isalnum(static_cast<unsigned char>(lx.s[lx.pos + 1])))) {
                coeff *= GaussRat::i();
                ++lx.pos;
            } else if (f == 'z') {
                ++lx.pos;
                bool barred = lx.pos < lx.s.size() && lx.s[lx.pos] == 'b';
                if (barred) ++lx.pos;
                size_t idx = 1;
                if (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
                    idx = lx.integer();
                if (idx < 1 || idx > n) lx.fail("variable index out of range");
                unsigned e = 1;
                if (lx.peek() == '^') {
                    ++lx.pos;
                    e = lx.integer();
                }
                mono[(barred ? 0 : n) + idx - 1] += e;
            } else {
                lx.fail("expected coefficient, z, zb, or i");
            }
            any = true;
            if (lx.peek() == '*')
                ++lx.pos;
            else
                break;
        }
        if (!any) lx.fail("empty term");
        out.add_term(mono, coeff);
    }
    return out;
}

std::string render_xi(const MPoly& xi, size_t n) {
    if (xi.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : xi.terms()) {
        GaussRat a = c;
        bool neg = false;
        if (a.is_real() ? sgn(a.re()) < 0 : (a.re().get_num() == 0 && sgn(a.im()) < 0)) {
            neg = true;
            a = -a;
        }
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string piece;
        if (!a.is_one()) piece = a.str();
        for (size_t v = 0; v < 2 * n; ++v) {
            if (m[v] == 0) continue;
            if (!piece.empty()) piece += "*";
            piece += v < n ? "zb" : "z";
            if (n > 1) piece += std::to_string((v % n) + 1);
            if (m[v] > 1) piece += "^" + std::to_string(m[v]);
        }
        if (piece.empty()) piece = "1";
        out += piece;
    }
    return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

Mono mono_from_json(const ordered_json& arr, size_t n, const char* what) {
    Mono m;
    for (const auto& e : arr) m.push_back(e.get<unsigned>());
    if (m.size() != n)
        throw std::invalid_argument(std::string("model: ") + what + " must have n entries");
    return m;
}

}  // namespace

ModelSpec parse_model_json(const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text);
    ModelSpec m;
    m.n = j.at("n").get<size_t>();
    m.k = j.at("k").get<size_t>();
    m.name = j.value("name", "");
    for (const auto& eq : j.at("xi")) {
        if (eq.is_string()) {
            m.xi.push_back(parse_xi_dsl(eq.get<std::string>(), m.n));
            continue;
        }
        MPoly p(2 * m.n);
        for (const auto& term : eq) {
            mpq_class re(term.value("re", "0")), im(term.value("im", "0"));
            re.canonicalize();
            im.canonicalize();
            GaussRat c(re, im);
            Mono zb = mono_from_json(term.at("zbar"), m.n, "zbar");
            Mono z = mono_from_json(term.at("z"), m.n, "z");
            Mono mono = zb;
            mono.insert(mono.end(), z.begin(), z.end());
            p.add_term(mono, c);
        }
        m.xi.push_back(std::move(p));
    }
    return m;
}

std::string render_model_json(const ModelSpec& m, int indent) {
    ordered_json j;
    if (!m.name.empty()) j["name"] = m.name;
    j["n"] = m.n;
    j["k"] = m.k;
    j["xi"] = ordered_json::array();
    for (const MPoly& xi : m.xi) j["xi"].push_back(render_xi(xi, m.n));
    return j.dump(indent) + "\n";
}

ModelSpec load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model_json(ss.str());
}

ModelSpec heisenberg_model() {
    ModelSpec m;
    m.n = 1;
    m.k = 1;
    m.name = "heisenberg";
    m.xi = {parse_xi_dsl("2*i*z*zb", 1)};
    return m;
}

ModelSpec paper_model(int which) {
    ModelSpec m;
    m.n = 1;
    m.k = 8;
    m.name = "M" + std::to_string(which);
    std::vector<std::string> shared = {
        "2*i*z*zb",
        "2*i*z^2*zb + 2*i*z*zb^2",
        "2*z^2*zb - 2*z*zb^2",
        "2*i*z^3*zb + 2*i*z*zb^3",
        "2*z^3*zb - 2*z*zb^3",
        "2*i*z^2*zb^2",
    };
    std::string x7, x8;
    switch (which) {
        case 1:
            x7 = "2*i*z^4*zb + 2*i*z*zb^4";
            x8 = "2*z^4*zb - 2*z*zb^4";
            break;
        case 2:
            x7 = "2*i*z^3*zb^2 + 2*i*z^2*zb^3";
            x8 = "2*z^3*zb^2 - 2*z^2*zb^3";
            break;
        case 3:
            x7 = "2*i*z^3*zb^2 + 2*i*z^2*zb^3";
            x8 = "2*i*z^4*zb + 2*i*z*zb^4";
            break;
        default:
            throw std::invalid_argument("paper_model: expected 1, 2, or 3");
    }
    for (const std::string& s : shared) m.xi.push_back(parse_xi_dsl(s, 1));
    m.xi.push_back(parse_xi_dsl(x7, 1));
    m.xi.push_back(parse_xi_dsl(x8, 1));
    return m;
}

}  // namespace craut
