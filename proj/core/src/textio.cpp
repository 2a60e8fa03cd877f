#include "craut/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace craut {

std::string render_derivative(const DiffRing& ring, const Derivative& d) {
    std::string out = ring.display_name(d.indet);
    if (!d.op.is_identity()) {
        out += "[";
        const auto& e = d.op.exponents();
        for (size_t j = 0; j < e.size(); ++j) {
            if (j) out += ",";
            out += std::to_string(e[j]);
        }
        out += "]";
    }
    return out;
}

namespace {

// Declaration order of the indeterminate, then exponents lex descending.
bool render_before(const Derivative& a, const Derivative& b) {
    if (a.indet != b.indet) return a.indet < b.indet;
    return a.op.exponents() > b.op.exponents();
}

std::string coeff_prefix(const GaussRat& c, bool leading) {
    // Returns the printed piece before the atom, with sign handling:
    // "", "-", "2*", "-2*", "i*", "(1/2+3/4*i)*", ...
    std::string body;
    bool negative = false;
    if (c.is_one()) {
        body = "";
    } else if ((-c).is_one()) {
        body = "";
        negative = true;
    } else if (c.is_real() || c.re().get_num() == 0) {
        GaussRat a = c;
        // Pull the sign out of a pure-real or pure-imaginary coefficient.
        if ((c.is_real() && sgn(c.re()) < 0) || (!c.is_real() && sgn(c.im()) < 0)) {
            negative = true;
            a = -c;
        }
        body = a.str() + "*";
    } else {
        body = c.str() + "*";  // mixed coefficients keep their parentheses
    }
    if (leading) return negative ? "-" + body : body;
    return negative ? " - " + body : " + " + body;
}

struct Lexer {
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
    char get() {
        skip_ws();
        return s[pos++];
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + " near '" +
                                    s.substr(pos, 8) + "': " + what);
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return s.substr(start, pos - start);
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        if (pos == start) fail("expected number");
        return s.substr(start, pos - start);
    }
};

struct Factor {
    bool is_atom;
    GaussRat coeff;
    Derivative atom;
};

Factor parse_factor(Lexer& lx, const RingPtr& ring) {
    char c = lx.peek();
    if (c == '(') {
        // Parenthesized coefficient such as (1/2+3/4*i).
        size_t depth = 0, start = lx.pos;
        do {
            if (lx.pos >= lx.s.size()) lx.fail("unbalanced '('");
            char ch = lx.s[lx.pos++];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
        } while (depth > 0);
        return {false, GaussRat::parse(lx.s.substr(start, lx.pos - start)), {}};
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
        return {false, GaussRat::parse(lx.number()), {}};

    std::string name = lx.ident();
    if (name == "i" && lx.peek() != '[') return {false, GaussRat::i(), {}};
    std::string display = name;
    if (name == "bar" && lx.peek() == '(') {
        lx.get();
        display = "bar(" + lx.ident() + ")";
        if (lx.get() != ')') lx.fail("expected ')' after bar(name");
    }
    int id = ring->find(display);
    if (id < 0) lx.fail("unknown indeterminate '" + display + "'");

    DerivOp op = DerivOp::identity(ring->nderivations());
    if (lx.peek() == '[') {
        lx.get();
        std::vector<unsigned> exps;
        while (true) {
            exps.push_back(static_cast<unsigned>(std::stoul(lx.number())));
            char d = lx.get();
            if (d == ']') break;
            if (d != ',') lx.fail("expected ',' or ']' in derivation exponents");
        }
        if (exps.size() != ring->nderivations())
            lx.fail("expected " + std::to_string(ring->nderivations()) + " exponents");
        op = DerivOp(std::move(exps));
    }
    return {true, {}, Derivative{id, std::move(op)}};
}

}  // namespace

std::string render_poly(const LinDiffPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<Derivative> order;
    order.reserve(p.nterms());
    for (const auto& [d, c] : p.terms()) order.push_back(d);
    std::sort(order.begin(), order.end(), render_before);

    std::string out;
    for (const Derivative& d : order) {
        out += coeff_prefix(p.coeff(d), out.empty());
        out += render_derivative(*p.ring(), d);
    }
    const GaussRat& k = p.constant_part();
    if (!k.is_zero()) {
        if (out.empty()) {
            out = k.str();
        } else if (k.is_real() || k.re().get_num() == 0) {
            bool neg = (k.is_real() && sgn(k.re()) < 0) || (!k.is_real() && sgn(k.im()) < 0);
            out += (neg ? " - " : " + ") + (neg ? (-k).str() : k.str());
        } else {
            out += " + " + k.str();
        }
    }
    return out;
}

LinDiffPoly parse_poly(const std::string& text, const RingPtr& ring) {
    Lexer lx{text};
    LinDiffPoly p(ring);
    if (lx.eof()) lx.fail("empty expression");
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            lx.get();
        } else if (!first) {
            lx.fail("expected '+' or '-' between terms");
        }
        first = false;

        GaussRat coeff = sign < 0 ? -GaussRat::one() : GaussRat::one();
        bool have_atom = false;
        Derivative atom;
        while (true) {
            Factor f = parse_factor(lx, ring);
            if (f.is_atom) {
                if (have_atom) lx.fail("two derivatives in one term (nonlinear)");
                have_atom = true;
                atom = f.atom;
            } else {
                coeff *= f.coeff;
            }
            if (lx.peek() == '*')
                lx.get();
            else
                break;
        }
        if (have_atom)
            p.add_term(atom, coeff);
        else
            p.add_constant(coeff);
    }
    return p;
}

namespace {

using ordered_json = nlohmann::ordered_json;

RingPtr ring_from_json(const ordered_json& j) {
    auto ring = std::make_shared<DiffRing>();
    for (const auto& d : j.at("derivations")) ring->add_derivation(d.get<std::string>());
    for (const auto& u : j.at("unknowns")) {
        std::string name = u.at("name").get<std::string>();
        std::string conj = u.value("conjugate", "self");
        if (conj == "self")
            ring->add_real_unknown(name);
        else if (conj == "tagged")
            ring->add_tagged_unknown(name);
        else
            throw std::invalid_argument("system: conjugate must be 'self' or 'tagged'");
    }
    return ring;
}

ordered_json ring_to_json(const DiffRing& ring) {
    ordered_json j;
    j["derivations"] = ring.derivations();
    j["unknowns"] = ordered_json::array();
    for (size_t id = 0; id < ring.nindets(); ++id) {
        const Indeterminate& u = ring.indet(id);
        if (u.is_barred) continue;
        j["unknowns"].push_back(
            {{"name", u.name},
             {"conjugate", u.bar_partner == static_cast<int>(id) ? "self" : "tagged"}});
    }
    return j;
}

}  // namespace

SystemDoc parse_system_json(const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text);
    SystemDoc doc;
    doc.ring = ring_from_json(j);

    RankingKind kind = RankingKind::orderly;
    std::vector<std::string> blocks;
    if (j.contains("ranking")) {
        std::string k = j["ranking"].value("kind", "orderly");
        if (k == "orderly")
            kind = RankingKind::orderly;
        else if (k == "elimination" || k == "elim")
            kind = RankingKind::elimination;
        else
            throw std::invalid_argument("system: ranking kind must be orderly or elimination");
        if (j["ranking"].contains("blocks"))
            for (const auto& b : j["ranking"]["blocks"]) blocks.push_back(b.get<std::string>());
    }
    doc.ranking = Ranking(doc.ring, kind, blocks);

    const char* key = j.contains("equations") ? "equations"
                      : j.contains("generators") ? "generators"
                                                 : nullptr;
    if (key)
        for (const auto& e : j[key]) doc.equations.push_back(parse_poly(e.get<std::string>(), doc.ring));
    doc.inconsistent = j.value("inconsistent", false);
    return doc;
}

std::string render_system_json(const SystemDoc& doc, bool as_canonical, int indent) {
    ordered_json j = ring_to_json(*doc.ring);
    j["ranking"] = {{"kind", doc.ranking.kind() == RankingKind::orderly ? "orderly" : "elimination"},
                    {"blocks", doc.ranking.blocks()}};
    ordered_json eqs = ordered_json::array();
    for (const LinDiffPoly& p : doc.equations) eqs.push_back(render_poly(p));
    if (as_canonical) {
        j["generators"] = std::move(eqs);
        j["inconsistent"] = doc.inconsistent;
    } else {
        j["equations"] = std::move(eqs);
    }
    return j.dump(indent) + "\n";
}

}  // namespace craut
