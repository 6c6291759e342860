#ifndef STARRED_FUNC_EXPR_HPP
#define STARRED_FUNC_EXPR_HPP

#include "starred/gaussian_rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace starred {

/// z^alpha zbar^beta x^m on C^{n+1} \ {0}.  alpha, beta have fixed length
/// n+1; the x exponent may be negative.  Ordering is lexicographic on
/// (alpha, beta, m), which is the canonical term order everywhere.
struct Monomial {
    std::vector<int> alpha;
    std::vector<int> beta;
    long m = 0;

    Monomial() = default;
    Monomial(std::vector<int> a, std::vector<int> b, long xexp)
        : alpha(std::move(a)), beta(std::move(b)), m(xexp) {
        if (alpha.size() != beta.size())
            throw std::invalid_argument("alpha/beta dimension mismatch");
    }

    static Monomial unit(int n) {
        return Monomial(std::vector<int>(n + 1, 0), std::vector<int>(n + 1, 0), 0);
    }

    int dim() const { return static_cast<int>(alpha.size()) - 1; }
    long alpha_degree() const {
        long d = 0;
        for (int a : alpha)
            d += a;
        return d;
    }
    long beta_degree() const {
        long d = 0;
        for (int b : beta)
            d += b;
        return d;
    }

    friend bool operator==(const Monomial &a, const Monomial &b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.m == b.m;
    }
    friend bool operator<(const Monomial &a, const Monomial &b) {
        if (a.alpha != b.alpha)
            return a.alpha < b.alpha;
        if (a.beta != b.beta)
            return a.beta < b.beta;
        return a.m < b.m;
    }
};

enum class Deriv { Holomorphic, Antiholomorphic };

struct GradingReport {
    bool u1_invariant;
    bool homogeneous;
    bool radial;
};

/// Finite Q(i)-linear combination of monomials; the polynomial-type
/// function ring on C^{n+1} \ {0}.  Zero coefficients are never stored.
class FuncExpr {
  public:
    explicit FuncExpr(int n) : n_(n) {
        if (n < 0)
            throw std::invalid_argument("dimension must be non-negative");
    }

    static FuncExpr zero(int n) { return FuncExpr(n); }
    static FuncExpr constant(int n, GaussianRational c) {
        FuncExpr f(n);
        f.add_term(Monomial::unit(n), std::move(c));
        return f;
    }
    static FuncExpr one(int n) { return constant(n, GaussianRational(1)); }
    /// z^k
    static FuncExpr z(int n, int k) {
        FuncExpr f(n);
        Monomial mo = Monomial::unit(n);
        mo.alpha.at(k) = 1;
        f.add_term(mo, GaussianRational(1));
        return f;
    }
    /// zbar^k
    static FuncExpr zb(int n, int k) {
        FuncExpr f(n);
        Monomial mo = Monomial::unit(n);
        mo.beta.at(k) = 1;
        f.add_term(mo, GaussianRational(1));
        return f;
    }
    /// x^m
    static FuncExpr x_pow(int n, long m) {
        FuncExpr f(n);
        Monomial mo = Monomial::unit(n);
        mo.m = m;
        f.add_term(mo, GaussianRational(1));
        return f;
    }
    static FuncExpr monomial(int n, Monomial mo, GaussianRational c) {
        FuncExpr f(n);
        if (mo.dim() != n)
            throw std::invalid_argument("monomial dimension mismatch");
        f.add_term(std::move(mo), std::move(c));
        return f;
    }

    int dim() const { return n_; }
    const std::map<Monomial, GaussianRational> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(Monomial mo, GaussianRational c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.try_emplace(std::move(mo), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    friend bool operator==(const FuncExpr &a, const FuncExpr &b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    friend FuncExpr operator+(const FuncExpr &a, const FuncExpr &b) {
        check_dim(a, b);
        FuncExpr r = a;
        for (const auto &[mo, c] : b.terms_)
            r.add_term(mo, c);
        return r;
    }
    friend FuncExpr operator-(const FuncExpr &a, const FuncExpr &b) {
        check_dim(a, b);
        FuncExpr r = a;
        for (const auto &[mo, c] : b.terms_)
            r.add_term(mo, -c);
        return r;
    }
    friend FuncExpr operator-(const FuncExpr &a) {
        FuncExpr r(a.n_);
        for (const auto &[mo, c] : a.terms_)
            r.terms_.emplace(mo, -c);
        return r;
    }
    friend FuncExpr operator*(const GaussianRational &s, const FuncExpr &a) {
        FuncExpr r(a.n_);
        if (s.is_zero())
            return r;
        for (const auto &[mo, c] : a.terms_)
            r.terms_.emplace(mo, s * c);
        return r;
    }
    FuncExpr &operator+=(const FuncExpr &b) { return *this = *this + b; }
    FuncExpr &operator-=(const FuncExpr &b) { return *this = *this - b; }

  private:
    static void check_dim(const FuncExpr &a, const FuncExpr &b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("dimension mismatch");
    }

    int n_;
    std::map<Monomial, GaussianRational> terms_;
};

/// Pointwise product; exponents add, x powers add.
inline FuncExpr fe_mul(const FuncExpr &a, const FuncExpr &b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch");
    FuncExpr r(a.dim());
    for (const auto &[ma, ca] : a.terms())
        for (const auto &[mb, cb] : b.terms()) {
            Monomial mo = ma;
            for (size_t i = 0; i < mo.alpha.size(); ++i) {
                mo.alpha[i] += mb.alpha[i];
                mo.beta[i] += mb.beta[i];
            }
            mo.m += mb.m;
            r.add_term(std::move(mo), ca * cb);
        }
    return r;
}

/// d/dz^k or d/dzbar^k, with x treated by the chain rule:
/// dx^m/dz^k = m x^{m-1} zbar^k and conjugately.
inline FuncExpr fe_diff(const FuncExpr &a, Deriv which, int k) {
    if (k < 0 || k > a.dim())
        throw std::out_of_range("derivative index out of range");
    FuncExpr r(a.dim());
    const bool hol = which == Deriv::Holomorphic;
    for (const auto &[mo, c] : a.terms()) {
        const auto &own = hol ? mo.alpha : mo.beta;
        if (own[static_cast<size_t>(k)] > 0) {
            Monomial d = mo;
            auto &e = hol ? d.alpha : d.beta;
            int p = e[static_cast<size_t>(k)]--;
            r.add_term(std::move(d), GaussianRational(p) * c);
        }
        if (mo.m != 0) {
            Monomial d = mo;
            d.m -= 1;
            auto &other = hol ? d.beta : d.alpha;
            other[static_cast<size_t>(k)] += 1;
            r.add_term(std::move(d), GaussianRational(mo.m) * c);
        }
    }
    return r;
}

/// d^gamma in z (or zbar) applied componentwise.
inline FuncExpr fe_diff_multi(const FuncExpr &a, Deriv which, const std::vector<int> &gamma) {
    FuncExpr r = a;
    for (int k = 0; k <= a.dim(); ++k)
        for (int j = 0; j < gamma[static_cast<size_t>(k)]; ++j) {
            if (r.empty())
                return r;
            r = fe_diff(r, which, k);
        }
    return r;
}

namespace detail {

/// All gamma >= 0 of length n+1 with |gamma| = total, with the
/// multinomial coefficient total!/prod(gamma_i!).
inline void compositions(int n, int total, std::vector<int> &cur, int pos,
                         std::vector<std::pair<std::vector<int>, Rational>> &out) {
    if (pos == n) {
        cur[static_cast<size_t>(pos)] = total;
        Rational coeff = factorial(std::accumulate(cur.begin(), cur.end(), 0));
        for (int g : cur)
            coeff /= factorial(g);
        out.emplace_back(cur, coeff);
        return;
    }
    for (int g = 0; g <= total; ++g) {
        cur[static_cast<size_t>(pos)] = g;
        compositions(n, total - g, cur, pos + 1, out);
    }
}

inline std::vector<std::pair<std::vector<int>, Rational>> multinomial_expansion(int n, int total) {
    std::vector<std::pair<std::vector<int>, Rational>> out;
    std::vector<int> cur(static_cast<size_t>(n) + 1, 0);
    compositions(n, total, cur, 0, out);
    return out;
}

} // namespace detail

/// Semantic zero test in the ring C[z, zbar, x, x^{-1}] / (x - sum z^k zbar^k):
/// clear negative x powers, substitute x -> sum z^k zbar^k, expand and check
/// the plain polynomial in z, zbar vanishes.
inline bool fe_is_zero(const FuncExpr &a) {
    if (a.empty())
        return true;
    long min_m = 0;
    for (const auto &[mo, c] : a.terms())
        min_m = std::min(min_m, mo.m);
    const long shift = -min_m;
    std::map<std::pair<std::vector<int>, std::vector<int>>, GaussianRational> poly;
    for (const auto &[mo, c] : a.terms()) {
        const long e = mo.m + shift;
        for (const auto &[gamma, mult] : detail::multinomial_expansion(a.dim(), static_cast<int>(e))) {
            std::vector<int> al = mo.alpha, be = mo.beta;
            for (size_t i = 0; i < al.size(); ++i) {
                al[i] += gamma[i];
                be[i] += gamma[i];
            }
            auto key = std::make_pair(std::move(al), std::move(be));
            auto [it, fresh] = poly.try_emplace(std::move(key), GaussianRational(mult) * c);
            if (!fresh)
                it->second += GaussianRational(mult) * c;
        }
    }
    for (const auto &[key, c] : poly)
        if (!c.is_zero())
            return false;
    return true;
}

/// Equality as functions on C^{n+1} \ {0}.
inline bool fe_equal(const FuncExpr &a, const FuncExpr &b) { return fe_is_zero(a - b); }

/// U(1) weight |alpha| - |beta|; C*-scaling weights (|alpha| + m, |beta| + m).
/// The empty expression is vacuously everything.
inline GradingReport fe_grading(const FuncExpr &a) {
    GradingReport g{true, true, true};
    for (const auto &[mo, c] : a.terms()) {
        const long da = mo.alpha_degree(), db = mo.beta_degree();
        if (da != db)
            g.u1_invariant = false;
        if (da + mo.m != 0 || db + mo.m != 0)
            g.homogeneous = false;
        if (da != 0 || db != 0)
            g.radial = false;
    }
    return g;
}

/// Writes a U(1)-invariant expression as sum_p h_p x^p with h_p homogeneous:
/// each term z^a zb^b x^m with |a| = |b| = d becomes (z^a zb^b x^{-d}) x^{m+d}.
inline std::map<long, FuncExpr> decompose_invariant(const FuncExpr &a) {
    std::map<long, FuncExpr> parts;
    for (const auto &[mo, c] : a.terms()) {
        const long d = mo.alpha_degree();
        if (d != mo.beta_degree())
            throw std::invalid_argument("decompose_invariant: input is not U(1)-invariant");
        Monomial h = mo;
        h.m = -d;
        auto [it, fresh] = parts.try_emplace(mo.m + d, FuncExpr::zero(a.dim()));
        it->second.add_term(std::move(h), c);
    }
    // collecting can cancel a whole radial level
    for (auto it = parts.begin(); it != parts.end();)
        it = it->second.empty() ? parts.erase(it) : std::next(it);
    return parts;
}

/// Truncated formal series in lambda with FuncExpr coefficients.
class LambdaFuncSeries {
  public:
    LambdaFuncSeries(int n, long order) : n_(n), coeffs_(static_cast<size_t>(order) + 1, FuncExpr(n)) {
        if (order < 0)
            throw std::invalid_argument("order must be non-negative");
    }
    explicit LambdaFuncSeries(std::vector<FuncExpr> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("series needs at least the constant coefficient");
        n_ = coeffs_[0].dim();
        for (const auto &f : coeffs_)
            if (f.dim() != n_)
                throw std::invalid_argument("dimension mismatch across lambda orders");
    }

    static LambdaFuncSeries from_constant(FuncExpr f, long order) {
        LambdaFuncSeries s(f.dim(), order);
        s[0] = std::move(f);
        return s;
    }

    int dim() const { return n_; }
    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const FuncExpr &operator[](long k) const { return coeffs_.at(static_cast<size_t>(k)); }
    FuncExpr &operator[](long k) { return coeffs_.at(static_cast<size_t>(k)); }

    friend bool operator==(const LambdaFuncSeries &a, const LambdaFuncSeries &b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

    friend LambdaFuncSeries operator+(const LambdaFuncSeries &a, const LambdaFuncSeries &b) {
        long n = std::min(a.order(), b.order());
        LambdaFuncSeries r(a.n_, n);
        for (long k = 0; k <= n; ++k)
            r[k] = a[k] + b[k];
        return r;
    }
    friend LambdaFuncSeries operator-(const LambdaFuncSeries &a, const LambdaFuncSeries &b) {
        long n = std::min(a.order(), b.order());
        LambdaFuncSeries r(a.n_, n);
        for (long k = 0; k <= n; ++k)
            r[k] = a[k] - b[k];
        return r;
    }

  private:
    int n_;
    std::vector<FuncExpr> coeffs_;
};

/// Pointwise (commutative) product of lambda series, truncated.
inline LambdaFuncSeries lfs_mul(const LambdaFuncSeries &a, const LambdaFuncSeries &b) {
    long n = std::min(a.order(), b.order());
    LambdaFuncSeries r(a.dim(), n);
    for (long k = 0; k <= n; ++k)
        for (long j = 0; j <= k; ++j)
            r[k] += fe_mul(a[j], b[k - j]);
    return r;
}

inline bool lfs_is_zero(const LambdaFuncSeries &a) {
    for (long k = 0; k <= a.order(); ++k)
        if (!fe_is_zero(a[k]))
            return false;
    return true;
}

inline bool lfs_equal(const LambdaFuncSeries &a, const LambdaFuncSeries &b) {
    return lfs_is_zero(a - b);
}

} // namespace starred

#endif
