#include "nscurve/parse.hpp"

#include "nscurve/error.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace nscurve {

namespace {

enum class Tok { Int, Ident, Op, LParen, RParen, Colon, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Int, s.substr(i, j - i), line, col});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), line, col});
            advance(j - i);
            continue;
        }
        Tok k;
        switch (c) {
        case '+': case '-': case '*': case '/': case '^': case ';': k = Tok::Op; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ':': k = Tok::Colon; break;
        default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), line, col});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// Polynomial in x, y, z that need not be homogeneous while parsing.
using Gen = std::map<Exps, TowerScalar>;

class Parser {
public:
    Parser(const std::string& text, const ParseContext& ctx, bool allow_vars)
        : toks_(tokenize(text)), ctx_(ctx), vars_(allow_vars) {
        level_ = ctx.level;
        if (peek().kind == Tok::Ident && peek().text == "level") {
            next();
            const Token& n = expect(Tok::Int, "level number");
            level_ = std::stoi(n.text);
            if (level_ > ctx_.max_level)
                throw Error(ErrorKind::LevelOverflow, "declared level exceeds max_level");
            if (peek().kind == Tok::Op && peek().text == ";") next();
        }
    }

    Gen parse_expr_to_end() {
        Gen g = expr();
        if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
        return g;
    }

    ProjPoint parse_point() {
        expect(Tok::LParen, "'('");
        std::array<TowerScalar, 3> c;
        for (int k = 0; k < 3; ++k) {
            if (k) expect(Tok::Colon, "':'");
            c[k] = as_scalar(expr(), peek());
        }
        expect(Tok::RParen, "')'");
        if (peek().kind != Tok::End) fail(peek(), "trailing input after point");
        bool all_zero = c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
        if (all_zero) fail(toks_.front(), "point with all coordinates zero");
        return ProjPoint(c[0], c[1], c[2]);
    }

    int level() const { return level_; }

    TowerScalar as_scalar(const Gen& g, const Token& at) const {
        if (g.empty()) return TowerScalar(0, ctx_.p);
        if (g.size() == 1 && g.begin()->first == Exps{0, 0, 0}) return g.begin()->second;
        fail(at, "expected a scalar expression");
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.col, msg); }

    const Token& expect(Tok k, const std::string& what) {
        if (peek().kind != k) fail(peek(), "expected " + what);
        return next();
    }

    bool at_op(const char* op) const { return peek().kind == Tok::Op && peek().text == op; }

    Gen constant(const TowerScalar& c) const {
        Gen g;
        if (!c.is_zero()) g[{0, 0, 0}] = c;
        return g;
    }

    static Gen add(Gen a, const Gen& b, bool subtract) {
        for (const auto& [e, c] : b) {
            TowerScalar v = subtract ? -c : c;
            auto it = a.find(e);
            if (it == a.end())
                a[e] = v;
            else {
                it->second += v;
                if (it->second.is_zero()) a.erase(it);
            }
        }
        return a;
    }

    static Gen mul(const Gen& a, const Gen& b) {
        Gen r;
        for (const auto& [e1, c1] : a)
            for (const auto& [e2, c2] : b) r = add(r, Gen{{{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2}}, false);
        return r;
    }

    Gen expr() {
        Gen acc = term();
        while (at_op("+") || at_op("-")) {
            bool sub = next().text == "-";
            acc = add(acc, term(), sub);
        }
        return acc;
    }

    Gen term() {
        Gen acc = unary();
        while (at_op("*") || at_op("/")) {
            Token op = next();
            Token at = peek();
            Gen rhs = unary();
            if (op.text == "*") {
                acc = mul(acc, rhs);
            } else {
                TowerScalar d = as_scalar(rhs, at);
                if (d.is_zero()) fail(at, "division by zero");
                acc = mul(acc, constant(d.inverse()));
            }
        }
        return acc;
    }

    Gen unary() {
        if (at_op("-")) {
            next();
            return add(Gen{}, unary(), true);
        }
        if (at_op("+")) {
            next();
            return unary();
        }
        return power();
    }

    Gen power() {
        Token at = peek();
        Gen base = atom();
        if (!at_op("^")) return base;
        next();
        Token et = peek();
        long long e = exponent();
        if (e < 0) {
            TowerScalar s = as_scalar(base, at);
            if (s.is_zero()) fail(et, "zero to a negative power");
            return constant(s.pow(e));
        }
        Gen r = constant(TowerScalar(1, ctx_.p));
        for (long long k = 0; k < e; ++k) r = mul(r, base);
        return r;
    }

    long long exponent() {
        bool neg = false;
        bool paren = false;
        if (peek().kind == Tok::LParen) {
            next();
            paren = true;
        }
        if (at_op("-")) {
            next();
            neg = true;
        }
        const Token& n = expect(Tok::Int, "integer exponent");
        if (n.text.size() > 6) fail(n, "exponent too large");
        long long e = std::stoll(n.text);
        if (paren) expect(Tok::RParen, "')'");
        return neg ? -e : e;
    }

    Gen atom() {
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            next();
            long long v = 0;
            for (char ch : t.text) v = (v * 10 + (ch - '0')) % static_cast<long long>(ctx_.p);
            return constant(TowerScalar(v, ctx_.p));
        }
        if (t.kind == Tok::LParen) {
            next();
            Gen g = expr();
            expect(Tok::RParen, "')'");
            return g;
        }
        if (t.kind == Tok::Ident) {
            next();
            if (t.text == "t") return constant(TowerScalar::t(ctx_.p));
            if (t.text == "r") {
                if (level_ < 1) fail(t, "'r' needs a level of at least 1");
                return constant(TowerScalar::generator(level_, ctx_.p));
            }
            if (vars_ && (t.text == "x" || t.text == "y" || t.text == "z")) {
                Exps e{0, 0, 0};
                e[t.text[0] - 'x'] = 1;
                return Gen{{e, TowerScalar(1, ctx_.p)}};
            }
            fail(t, "unknown identifier '" + t.text + "'");
        }
        if (t.kind == Tok::End) fail(t, "unexpected end of input");
        fail(t, "unexpected '" + t.text + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    ParseContext ctx_;
    bool vars_;
    int level_;
};

} // namespace

TowerScalar parse_scalar(const std::string& text, const ParseContext& ctx) {
    Parser ps(text, ctx, false);
    Gen g = ps.parse_expr_to_end();
    return ps.as_scalar(g, Token{Tok::End, "", 1, 1});
}

HomPoly parse_poly(const std::string& text, const ParseContext& ctx) {
    Parser ps(text, ctx, true);
    Gen g = ps.parse_expr_to_end();
    if (g.empty()) return HomPoly(0, ctx.p);
    const Exps& first = g.begin()->first;
    const int d = first[0] + first[1] + first[2];
    HomPoly f(d, ctx.p);
    for (const auto& [e, c] : g) {
        if (e[0] + e[1] + e[2] != d) throw ParseError(1, 1, "polynomial is not homogeneous");
        f.set(e, c);
    }
    return f;
}

ProjPoint parse_point(const std::string& text, const ParseContext& ctx) {
    Parser ps(text, ctx, false);
    return ps.parse_point();
}

namespace {

std::string term_string(Coeff c, std::size_t tpow, std::size_t rpow) {
    std::vector<std::string> parts;
    if (c != 1 || (tpow == 0 && rpow == 0)) parts.push_back(std::to_string(c));
    if (tpow) parts.push_back(tpow == 1 ? "t" : "t^" + std::to_string(tpow));
    if (rpow) parts.push_back(rpow == 1 ? "r" : "r^" + std::to_string(rpow));
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
    return s;
}

// Polynomial in r_m (or t when m = 0), folding r^(p^m) into t.
std::string poly_string(const FpPoly& f, std::size_t q, bool& is_sum, bool& is_product) {
    std::vector<std::string> terms;
    is_product = false;
    for (std::size_t j = f.coeffs().size(); j-- > 0;) {
        Coeff c = f.coeffs()[j];
        if (!c) continue;
        std::string s = q == 1 ? term_string(c, j, 0) : term_string(c, j / q, j % q);
        if (s.find('*') != std::string::npos) is_product = true;
        terms.push_back(s);
    }
    is_sum = terms.size() > 1;
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i];
    return out;
}

} // namespace

std::string format_scalar(const TowerScalar& x0, int level) {
    TowerScalar x = x0.reduced();
    if (x.level() > 0) x = lift(x, std::max(level, x.level()), std::max(level, x.level()));
    std::size_t q = 1;
    for (int i = 0; i < x.level(); ++i) q *= x.p();
    bool nsum, nprod, dsum, dprod;
    std::string n = poly_string(x.num(), q, nsum, nprod);
    if (x.den().is_one()) return n;
    std::string d = poly_string(x.den(), q, dsum, dprod);
    if (nsum) n = "(" + n + ")";
    if (dsum || dprod) d = "(" + d + ")";
    return n + "/" + d;
}

std::string format_poly(const HomPoly& f, int level) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        std::string mono;
        const char* names = "xyz";
        for (int v = 0; v < 3; ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string cs = format_scalar(c, level);
        std::string term;
        if (mono.empty())
            term = cs;
        else if (c.is_one())
            term = mono;
        else {
            if (cs.find('+') != std::string::npos || cs.find('/') != std::string::npos) cs = "(" + cs + ")";
            term = cs + "*" + mono;
        }
        out += (first ? "" : " + ") + term;
        first = false;
    }
    return out;
}

std::string format_point(const ProjPoint& P, int level) {
    return "(" + format_scalar(P[0], level) + ":" + format_scalar(P[1], level) + ":" + format_scalar(P[2], level) + ")";
}

} // namespace nscurve
