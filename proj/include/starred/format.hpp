#ifndef STARRED_FORMAT_HPP
#define STARRED_FORMAT_HPP

#include "starred/classification.hpp"
#include "starred/func_expr.hpp"

#include <sstream>
#include <string>

namespace starred {

inline std::string rational_str(const Rational &q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1)
        os << '/' << denominator(q);
    return os.str();
}

/// Canonical coefficient form: "p/q", "p/qi", or "(re+imi)" when composite.
inline std::string grat_str(const GaussianRational &c) {
    if (c.im == 0)
        return rational_str(c.re);
    if (c.re == 0)
        return rational_str(c.im) + "i";
    std::string s = "(" + rational_str(c.re);
    s += c.im < 0 ? "-" : "+";
    Rational a = c.im < 0 ? Rational(-c.im) : c.im;
    s += rational_str(a) + "i)";
    return s;
}

/// Variable factors of a monomial, "" for the constant monomial.
inline std::string monomial_str(const Monomial &mo) {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const std::string &v, long e) {
        if (e == 0)
            return;
        if (!first)
            os << '*';
        first = false;
        os << v;
        if (e != 1)
            os << '^' << e;
    };
    for (size_t k = 0; k < mo.alpha.size(); ++k)
        put("z" + std::to_string(k), mo.alpha[k]);
    for (size_t k = 0; k < mo.beta.size(); ++k)
        put("zb" + std::to_string(k), mo.beta[k]);
    put("x", mo.m);
    return os.str();
}

/// Canonical text form: terms in the (alpha, beta, m) order joined by
/// " + " / " - " with real or pure-imaginary signs folded into the joiner.
inline std::string fe_str(const FuncExpr &f) {
    if (f.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[mo, c] : f.terms()) {
        bool neg = false;
        GaussianRational a = c;
        if ((c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0)) {
            neg = true;
            a = -c;
        }
        const std::string vars = monomial_str(mo);
        std::string body;
        if (vars.empty())
            body = grat_str(a);
        else if (a == GaussianRational(1))
            body = vars;
        else
            body = grat_str(a) + "*" + vars;
        if (first)
            os << (neg ? "-" : "") << body;
        else
            os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

/// "[f0; f1; ...]", one entry per lambda order.
inline std::string lfs_str(const LambdaFuncSeries &s) {
    std::ostringstream os;
    os << '[';
    for (long k = 0; k <= s.order(); ++k) {
        if (k)
            os << "; ";
        os << fe_str(s[k]);
    }
    os << ']';
    return os.str();
}

inline std::string dseries_str(const DSeries &D) {
    std::ostringstream os;
    os << '1';
    for (long r = 1; r <= D.order(); ++r) {
        const GaussianRational &c = D.d_coeff(r);
        if (c.is_zero())
            continue;
        bool neg = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
        GaussianRational a = neg ? -c : c;
        os << (neg ? " - " : " + ");
        if (!(a == GaussianRational(1)))
            os << grat_str(a) << '*';
        os << 'l';
        if (r != 1)
            os << '^' << r;
    }
    return os.str();
}

inline std::string verdict_str(Verdict v) {
    return v == Verdict::Equivalent ? "equivalent" : "non-equivalent";
}

inline std::string report_str(const ObstructionReport &rep) {
    std::ostringstream os;
    os << "verdict: " << verdict_str(rep.verdict) << '\n';
    if (rep.first_divergence) {
        os << "first_divergence: " << *rep.first_divergence << '\n';
        os << "delta: " << grat_str(rep.delta) << '\n';
    } else {
        os << "first_divergence: none\n";
    }
    os << "c: [";
    for (size_t r = 0; r < rep.c_params.size(); ++r)
        os << (r ? "; " : "") << grat_str(rep.c_params[r]);
    os << "]\nc': [";
    for (size_t r = 0; r < rep.cprime_params.size(); ++r)
        os << (r ? "; " : "") << grat_str(rep.cprime_params[r]);
    os << "]\n";
    return os.str();
}

} // namespace starred

#endif
