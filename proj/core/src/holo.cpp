#include "craut/holo.hpp"

#include <cctype>
#include <stdexcept>

namespace craut {

HoloVectorField HoloVectorField::zero(size_t n, size_t k) {
    HoloVectorField X;
    X.n = n;
    X.k = k;
    X.z_comp.assign(n, MPoly(n + k));
    X.w_comp.assign(k, MPoly(n + k));
    return X;
}

const MPoly& HoloVectorField::component(size_t idx) const {
    return idx < n ? z_comp[idx] : w_comp[idx - n];
}

MPoly& HoloVectorField::component(size_t idx) {
    return idx < n ? z_comp[idx] : w_comp[idx - n];
}

bool HoloVectorField::is_zero() const {
    for (const MPoly& p : z_comp)
        if (!p.is_zero()) return false;
    for (const MPoly& p : w_comp)
        if (!p.is_zero()) return false;
    return true;
}

HoloVectorField HoloVectorField::operator-() const {
    HoloVectorField X = *this;
    for (MPoly& p : X.z_comp) p = -p;
    for (MPoly& p : X.w_comp) p = -p;
    return X;
}

HoloVectorField& HoloVectorField::operator+=(const HoloVectorField& o) {
    if (n != o.n || k != o.k) throw std::invalid_argument("vector field signature mismatch");
    for (size_t i = 0; i < n; ++i) z_comp[i] += o.z_comp[i];
    for (size_t l = 0; l < k; ++l) w_comp[l] += o.w_comp[l];
    return *this;
}

HoloVectorField HoloVectorField::scaled(const GaussRat& c) const {
    HoloVectorField X = *this;
    for (MPoly& p : X.z_comp) p = p.scaled(c);
    for (MPoly& p : X.w_comp) p = p.scaled(c);
    return X;
}

HoloVectorField bracket(const HoloVectorField& X, const HoloVectorField& Y) {
    if (X.n != Y.n || X.k != Y.k)
        throw std::invalid_argument("bracket: vector field signature mismatch");
    const size_t dim = X.n + X.k;
    HoloVectorField out = HoloVectorField::zero(X.n, X.k);
    for (size_t c = 0; c < dim; ++c) {
        MPoly acc(dim);
        for (size_t v = 0; v < dim; ++v) {
            acc += X.component(v) * Y.component(c).derivative(v);
            acc -= Y.component(v) * X.component(c).derivative(v);
        }
        out.component(c) = std::move(acc);
    }
    return out;
}

namespace {

std::string var_name(size_t v, size_t n) {
    if (v < n) return n == 1 ? "z" : "z" + std::to_string(v + 1);
    return "w" + std::to_string(v - n + 1);
}

std::string mono_str(const Mono& m, const GaussRat& c, size_t n) {
    GaussRat a = c;
    bool neg = false;
    bool pure_im = a.re().get_num() == 0;
    if ((a.is_real() && sgn(a.re()) < 0) || (pure_im && sgn(a.im()) < 0)) {
        neg = true;
        a = -a;
    }
    std::string piece;
    if (!a.is_one()) piece = a.str();
    for (size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!piece.empty()) piece += "*";
        piece += var_name(v, n);
        if (m[v] > 1) piece += "^" + std::to_string(m[v]);
    }
    if (piece.empty()) piece = "1";
    return (neg ? "-" : "") + piece;
}

}  // namespace

std::string render_holo_poly(const MPoly& p, size_t n, size_t k) {
    (void)k;
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        std::string piece = mono_str(m, c, n);
        if (out.empty()) {
            out = piece;
        } else if (piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

std::string render_field(const HoloVectorField& X) {
    std::string out;
    for (size_t c = 0; c < X.n + X.k; ++c) {
        const MPoly& p = X.component(c);
        if (p.is_zero()) continue;
        std::string coeff = render_holo_poly(p, X.n, X.k);
        std::string piece;
        if (coeff == "1")
            piece = "";
        else if (p.terms().size() > 1)
            piece = "(" + coeff + ")*";
        else
            piece = coeff + "*";
        std::string dterm = "d/d" + var_name(c, X.n);
        if (!out.empty()) {
            if (!piece.empty() && piece[0] == '-') {
                out += " - " + piece.substr(1) + dterm;
                continue;
            }
            out += " + " + piece + dterm;
            continue;
        }
        out += piece + dterm;
    }
    return out.empty() ? "0" : out;
}

namespace {

struct HoloLexer {
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
        throw std::invalid_argument("field parse error near '" + s.substr(pos, 10) + "': " + what);
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
    // Parses one product of coefficient factors and variable powers.
    // Returns when hitting +, -, end, or 'd/d'.
    bool at_dterm() {
        skip_ws();
        return pos + 2 < s.size() && s[pos] == 'd' && s[pos + 1] == '/' && s[pos + 2] == 'd';
    }
};

std::pair<Mono, GaussRat> parse_mono(HoloLexer& lx, size_t n, size_t k) {
    Mono m(n + k, 0);
    GaussRat c = GaussRat::one();
    bool any = false;
    while (!lx.eof() && !lx.at_dterm()) {
        char f = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(f))) {
            c *= GaussRat::parse(lx.rational());
        } else if (f == 'i') {
            c *= GaussRat::i();
            ++lx.pos;
        } else if (f == 'z' || f == 'w') {
            ++lx.pos;
            size_t idx = 1;
            if (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
                idx = lx.integer();
            size_t v = f == 'z' ? idx - 1 : n + idx - 1;
            if ((f == 'z' && idx > n) || (f == 'w' && idx > k)) lx.fail("variable index out of range");
            unsigned e = 1;
            if (lx.peek() == '^') {
                ++lx.pos;
                e = lx.integer();
            }
            m[v] += e;
        } else {
            lx.fail("expected coefficient or variable");
        }
        any = true;
        if (lx.peek() == '*') {
            ++lx.pos;
        } else {
            break;
        }
    }
    if (!any) lx.fail("empty monomial");
    return {m, c};
}

MPoly parse_poly_until(HoloLexer& lx, size_t n, size_t k, char closer) {
    MPoly p(n + k);
    bool first = true;
    while (!lx.eof() && lx.peek() != closer) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++lx.pos;
        } else if (!first) {
            lx.fail("expected '+' or '-'");
        }
        first = false;
        auto [m, coeff] = parse_mono(lx, n, k);
        p.add_term(m, sign < 0 ? -coeff : coeff);
    }
    return p;
}

}  // namespace

MPoly parse_holo_poly(const std::string& text, size_t n, size_t k) {
    HoloLexer lx{text};
    MPoly p = parse_poly_until(lx, n, k, '\0');
    if (!lx.eof()) lx.fail("trailing input");
    return p;
}

HoloVectorField parse_field(const std::string& text, size_t n, size_t k) {
    HoloVectorField X = HoloVectorField::zero(n, k);
    HoloLexer lx{text};
    if (lx.eof()) lx.fail("empty field");
    if (lx.peek() == '0') {
        ++lx.pos;
        if (lx.eof()) return X;
        lx.fail("trailing input after 0");
    }
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++lx.pos;
        } else if (!first) {
            lx.fail("expected '+' or '-' between field terms");
        }
        first = false;

        MPoly coeff(n + k);
        if (lx.peek() == '(') {
            ++lx.pos;
            coeff = parse_poly_until(lx, n, k, ')');
            if (lx.peek() != ')') lx.fail("expected ')'");
            ++lx.pos;
            if (lx.peek() == '*') ++lx.pos;
        } else if (!lx.at_dterm()) {
            auto [m, c0] = parse_mono(lx, n, k);
            coeff.add_term(m, c0);
            if (lx.peek() == '*') ++lx.pos;
        } else {
            coeff = MPoly::constant(n + k, GaussRat::one());
        }
        if (!lx.at_dterm()) lx.fail("expected d/d<var>");
        lx.pos += 3;
        char v = lx.s[lx.pos];
        if (v != 'z' && v != 'w') lx.fail("expected d/dz or d/dw");
        ++lx.pos;
        size_t idx = 1;
        if (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            idx = lx.integer();
        size_t comp = v == 'z' ? idx - 1 : n + idx - 1;
        if ((v == 'z' && idx > n) || (v == 'w' && idx > k)) lx.fail("component index out of range");
        if (sign < 0) coeff = -coeff;
        X.component(comp) += coeff;
    }
    return X;
}

}  // namespace craut
