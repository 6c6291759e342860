#ifndef STARRED_PARSE_HPP
#define STARRED_PARSE_HPP

#include "starred/func_expr.hpp"
#include "starred/star_product.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace starred {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string &msg, size_t at)
        : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

namespace detail {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen,
                LBracket, RBracket, Semi, End } kind;
    std::string text;
    size_t pos;
};

inline std::vector<Token> tokenize(const std::string &src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            out.push_back({Token::Int, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j])))
                ++j;
            // trailing digits belong to the variable name (z0, zb12)
            std::string name = src.substr(i, j - i);
            if (name != "i" && name != "l" && name != "x") {
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                    ++j;
                name = src.substr(i, j - i);
            }
            out.push_back({Token::Ident, name, i});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '^': k = Token::Caret; break;
        case '/': k = Token::Slash; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        case '[': k = Token::LBracket; break;
        case ']': k = Token::RBracket; break;
        case ';': k = Token::Semi; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::End, "", src.size()});
    return out;
}

class ExprParser {
  public:
    ExprParser(const std::string &src, int n) : toks_(tokenize(src)), n_(n) {}

    FuncExpr parse_full() {
        FuncExpr f = parse_expr();
        expect(Token::End, "trailing input");
        return f;
    }

    LambdaFuncSeries parse_series() {
        expect(Token::LBracket, "expected '['");
        std::vector<FuncExpr> coeffs;
        coeffs.push_back(parse_expr());
        while (peek().kind == Token::Semi) {
            next();
            coeffs.push_back(parse_expr());
        }
        expect(Token::RBracket, "expected ']'");
        expect(Token::End, "trailing input");
        return LambdaFuncSeries(std::move(coeffs));
    }

  private:
    const Token &peek() const { return toks_[ip_]; }
    const Token &next() { return toks_[ip_++]; }
    void expect(Token::Kind k, const std::string &what) {
        if (peek().kind != k)
            throw ParseError(what, peek().pos);
        next();
    }

    FuncExpr parse_expr() {
        FuncExpr acc = parse_term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            const bool minus = next().kind == Token::Minus;
            FuncExpr t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    FuncExpr parse_term() {
        bool neg = false;
        while (peek().kind == Token::Minus) {
            neg = !neg;
            next();
        }
        FuncExpr acc = parse_factor();
        while (peek().kind == Token::Star) {
            next();
            acc = fe_mul(acc, parse_factor());
        }
        return neg ? -acc : acc;
    }

    FuncExpr parse_factor() {
        const Token &t = peek();
        switch (t.kind) {
        case Token::Int:
            return FuncExpr::constant(n_, parse_coeff_tail(parse_rational()));
        case Token::LParen:
            return FuncExpr::constant(n_, parse_paren_coeff());
        case Token::Ident:
            return parse_variable();
        default:
            throw ParseError("expected coefficient or variable", t.pos);
        }
    }

    Rational parse_rational() {
        const Token &t = peek();
        if (t.kind != Token::Int)
            throw ParseError("expected number", t.pos);
        Rational num{Integer(next().text)};
        if (peek().kind == Token::Slash) {
            next();
            const Token &d = peek();
            if (d.kind != Token::Int)
                throw ParseError("malformed rational: expected denominator", d.pos);
            Integer den(next().text);
            if (den == 0)
                throw ParseError("malformed rational: zero denominator", d.pos);
            num /= den;
        }
        return num;
    }

    Rational parse_signed_rational() {
        bool neg = false;
        while (peek().kind == Token::Minus) {
            neg = !neg;
            next();
        }
        Rational r = parse_rational();
        return neg ? Rational(-r) : r;
    }

    GaussianRational parse_coeff_tail(Rational r) {
        if (peek().kind == Token::Ident && peek().text == "i") {
            next();
            return GaussianRational(Rational(0), std::move(r));
        }
        return GaussianRational(std::move(r));
    }

    // "(re)", "(re+imi)", "(re-imi)", "(imi)" with re, im signed rationals
    GaussianRational parse_paren_coeff() {
        expect(Token::LParen, "expected '('");
        Rational a = parse_signed_rational();
        GaussianRational c;
        if (peek().kind == Token::Ident && peek().text == "i") {
            next();
            c = GaussianRational(Rational(0), std::move(a));
        } else if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            const bool minus = next().kind == Token::Minus;
            Rational b = parse_rational();
            const Token &it = peek();
            if (!(it.kind == Token::Ident && it.text == "i"))
                throw ParseError("expected 'i' after imaginary part", it.pos);
            next();
            c = GaussianRational(std::move(a), minus ? Rational(-b) : b);
        } else {
            c = GaussianRational(std::move(a));
        }
        expect(Token::RParen, "expected ')'");
        return c;
    }

    FuncExpr parse_variable() {
        const Token t = next();
        const std::string &name = t.text;
        long exp = 1;
        if (peek().kind == Token::Caret) {
            next();
            bool neg = peek().kind == Token::Minus;
            if (neg)
                next();
            const Token &e = peek();
            if (e.kind != Token::Int)
                throw ParseError("expected exponent", e.pos);
            exp = std::stol(next().text);
            if (neg)
                exp = -exp;
        }
        if (name == "x") {
            return FuncExpr::x_pow(n_, exp);
        }
        const bool bar = name.size() >= 2 && name[1] == 'b';
        const size_t digits = bar ? 2 : 1;
        if (name[0] != 'z' || name.size() <= digits)
            throw ParseError("unknown variable '" + name + "'", t.pos);
        for (size_t k = digits; k < name.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(name[k])))
                throw ParseError("unknown variable '" + name + "'", t.pos);
        const int idx = std::stoi(name.substr(digits));
        if (idx > n_)
            throw ParseError("variable index " + std::to_string(idx) + " exceeds dimension " +
                                 std::to_string(n_), t.pos);
        if (exp < 0)
            throw ParseError("negative exponent only allowed on x", t.pos);
        Monomial mo = Monomial::unit(n_);
        (bar ? mo.beta : mo.alpha)[static_cast<size_t>(idx)] = static_cast<int>(exp);
        return FuncExpr::monomial(n_, std::move(mo), GaussianRational(1));
    }

    std::vector<Token> toks_;
    size_t ip_ = 0;
    int n_;
};

} // namespace detail

/// Parse an expression in the z<i>/zb<i>/x grammar.
inline FuncExpr parse_expr(const std::string &src, int n) {
    return detail::ExprParser(src, n).parse_full();
}

/// Parse a bracketed lambda series "[f0; f1; ...]".
inline LambdaFuncSeries parse_lambda_series(const std::string &src, int n) {
    return detail::ExprParser(src, n).parse_series();
}

/// Parse a rational like "-1/2".
inline Rational parse_rational(const std::string &src) {
    FuncExpr f = parse_expr(src, 0);
    if (f.empty())
        return Rational(0);
    if (f.terms().size() != 1)
        throw ParseError("expected a rational constant", 0);
    const auto &[mo, c] = *f.terms().begin();
    if (!(mo == Monomial::unit(0)) || c.im != 0)
        throw ParseError("expected a rational constant", 0);
    return c.re;
}

/// Parse a D series like "1 + l + 1/2*l^3" in the formal variable l.
/// Terms are coefficient times a power of l; the constant term must be 1.
inline DSeries parse_dseries(const std::string &src, long N) {
    // reuse the expression machinery with l in place of x: substitute the
    // token text up front so "l^k" rides the x exponent slot
    std::string rewritten = src;
    for (size_t i = 0; i < rewritten.size(); ++i)
        if (rewritten[i] == 'l' &&
            (i == 0 || !std::isalpha(static_cast<unsigned char>(rewritten[i - 1]))) &&
            (i + 1 == rewritten.size() || !std::isalnum(static_cast<unsigned char>(rewritten[i + 1]))))
            rewritten[i] = 'x';
    FuncExpr f = parse_expr(rewritten, 0);
    TruncUniSeries d(N);
    for (const auto &[mo, c] : f.terms()) {
        if (mo.alpha_degree() != 0 || mo.beta_degree() != 0 || mo.m < 0)
            throw ParseError("a D series is a polynomial in l", 0);
        if (mo.m <= N)
            d[mo.m] = c;
        // orders beyond N are silently truncated
    }
    if (!(d[0] == GaussianRational(1)))
        throw ParseError("D series must have constant term 1", 0);
    return DSeries(std::move(d));
}

} // namespace starred

#endif
