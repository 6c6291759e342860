#ifndef STARRED_STAR_PRODUCT_HPP
#define STARRED_STAR_PRODUCT_HPP

#include "starred/func_expr.hpp"
#include "starred/trunc_series.hpp"

#include <stdexcept>
#include <vector>

namespace starred {

/// The series D(lambda) = 1 + sum d_r lambda^r parameterizing the star
/// product family, together with its inverse C = D^{-1}.
class DSeries {
  public:
    explicit DSeries(TruncUniSeries d) : d_(std::move(d)), c_(series_invert(d_)) {}

    static DSeries identity(long order) { return DSeries(TruncUniSeries::one(order)); }

    long order() const { return d_.order(); }
    const TruncUniSeries &d() const { return d_; }
    const TruncUniSeries &c() const { return c_; }
    const GaussianRational &d_coeff(long r) const { return d_[r]; }
    const GaussianRational &c_coeff(long r) const { return c_[r]; }

    friend bool operator==(const DSeries &a, const DSeries &b) { return a.d_ == b.d_; }

  private:
    TruncUniSeries d_;
    TruncUniSeries c_;
};

/// Triangular table a_{k,r} with K^D_k = sum_{r<=k} a_{k,r} M_r.
struct KTable {
    std::vector<std::vector<GaussianRational>> a; // a[k][r], r <= k

    const GaussianRational &at(long k, long r) const {
        return a.at(static_cast<size_t>(k)).at(static_cast<size_t>(r));
    }
    long rows() const { return static_cast<long>(a.size()); }
};

/// a_{k,r} = u^k coefficient of (1/r!)(uC)^r prod_{s=1..r}(1+s uC)^{-1}.
inline KTable k_table(const DSeries &D, long N) {
    KTable t;
    t.a.assign(static_cast<size_t>(N) + 1, {});
    // d coefficients beyond the stored order are zero; re-invert at order N
    // so C is consistent with that reading.
    TruncUniSeries dN(N);
    for (long r = 0; r <= N; ++r)
        dN[r] = r <= D.order() ? D.d_coeff(r) : GaussianRational();
    const TruncUniSeries cN = series_invert(dN);
    std::vector<TruncUniSeries> cols;
    for (long r = 0; r <= N; ++r)
        cols.push_back(product_of_inverses(r, cN, N));
    for (long k = 0; k <= N; ++k) {
        t.a[static_cast<size_t>(k)].resize(static_cast<size_t>(k) + 1);
        for (long r = 0; r <= k; ++r)
            t.a[static_cast<size_t>(k)][static_cast<size_t>(r)] = cols[static_cast<size_t>(r)][k];
    }
    return t;
}

/// M_r(F,G) = x^r sum over index tuples of d^r F / dz * d^r G / dzbar.
/// Tuples collapse to multi-indices gamma with multiplicity r!/gamma!.
inline FuncExpr m_r_apply(long r, const FuncExpr &f, const FuncExpr &g) {
    if (r < 0)
        throw std::invalid_argument("m_r_apply: r must be non-negative");
    if (f.dim() != g.dim())
        throw std::invalid_argument("dimension mismatch");
    const int n = f.dim();
    if (r == 0)
        return fe_mul(f, g);
    FuncExpr acc(n);
    for (const auto &[gamma, mult] : detail::multinomial_expansion(n, static_cast<int>(r))) {
        FuncExpr df = fe_diff_multi(f, Deriv::Holomorphic, gamma);
        if (df.empty())
            continue;
        FuncExpr dg = fe_diff_multi(g, Deriv::Antiholomorphic, gamma);
        if (dg.empty())
            continue;
        acc += GaussianRational(mult) * fe_mul(df, dg);
    }
    return fe_mul(FuncExpr::x_pow(n, r), acc);
}

/// Wick star product, truncated at lambda^N.  Bilinear over the lambda
/// series; the r-th order term is (1/r!) sum over tuples, i.e.
/// sum_{|gamma|=r} (1/gamma!) d^gamma_z F d^gamma_zbar G.
inline LambdaFuncSeries wick_product(const LambdaFuncSeries &F, const LambdaFuncSeries &G, long N) {
    if (F.dim() != G.dim())
        throw std::invalid_argument("dimension mismatch");
    if (F.order() < N || G.order() < N)
        throw std::invalid_argument("operand order below requested truncation");
    const int n = F.dim();
    LambdaFuncSeries out(n, N);
    for (long r = 0; r <= N; ++r) {
        const Rational rfac = factorial(r);
        for (const auto &[gamma, mult] : detail::multinomial_expansion(n, static_cast<int>(r))) {
            const GaussianRational w{mult / rfac}; // r!/gamma! / r! = 1/gamma!
            for (long a = 0; a + r <= N; ++a) {
                FuncExpr df = fe_diff_multi(F[a], Deriv::Holomorphic, gamma);
                if (df.empty())
                    continue;
                for (long b = 0; a + b + r <= N; ++b) {
                    FuncExpr dg = fe_diff_multi(G[b], Deriv::Antiholomorphic, gamma);
                    if (dg.empty())
                        continue;
                    out[a + b + r] += w * fe_mul(df, dg);
                }
            }
        }
    }
    return out;
}

inline LambdaFuncSeries wick_product(const FuncExpr &f, const FuncExpr &g, long N) {
    return wick_product(LambdaFuncSeries::from_constant(f, N), LambdaFuncSeries::from_constant(g, N), N);
}

/// {F,G} = -2i sum_k (dF/dz^k dG/dzbar^k - dF/dzbar^k dG/dz^k).
/// Sign fixed so that F * S_DJ - S_DJ * F = (i lambda / 2){F, J} holds
/// verbatim for the Wick product.
inline FuncExpr poisson_bracket(const FuncExpr &F, const FuncExpr &G) {
    if (F.dim() != G.dim())
        throw std::invalid_argument("dimension mismatch");
    const int n = F.dim();
    FuncExpr acc(n);
    for (int k = 0; k <= n; ++k) {
        acc += fe_mul(fe_diff(F, Deriv::Holomorphic, k), fe_diff(G, Deriv::Antiholomorphic, k));
        acc -= fe_mul(fe_diff(F, Deriv::Antiholomorphic, k), fe_diff(G, Deriv::Holomorphic, k));
    }
    return GaussianRational(Rational(0), Rational(-2)) * acc;
}

/// f *^D g for homogeneous f, g: lambda^k coefficient is
/// x^{-k} sum_r a_{k,r} M_r(f,g).
inline LambdaFuncSeries star_hom(const FuncExpr &f, const FuncExpr &g, const DSeries &D, long N) {
    if (!fe_grading(f).homogeneous || !fe_grading(g).homogeneous)
        throw std::invalid_argument("star_hom requires homogeneous factors");
    const int n = f.dim();
    const KTable t = k_table(D, N);
    std::vector<FuncExpr> m_vals;
    for (long r = 0; r <= N; ++r)
        m_vals.push_back(m_r_apply(r, f, g));
    LambdaFuncSeries out(n, N);
    for (long k = 0; k <= N; ++k) {
        FuncExpr row(n);
        for (long r = 0; r <= k; ++r)
            row += t.at(k, r) * m_vals[static_cast<size_t>(r)];
        out[k] = fe_mul(FuncExpr::x_pow(n, -k), row);
    }
    return out;
}

/// *^D on the U(1)-invariant subalgebra: decompose each lambda coefficient
/// into homogeneous times radial, use (h1 x^p) *^D (h2 x^q) = x^{p+q} (h1 *^D h2),
/// extend bilinearly over lambda orders.
inline LambdaFuncSeries star_invariant(const LambdaFuncSeries &F, const LambdaFuncSeries &G,
                                       const DSeries &D, long N) {
    if (F.dim() != G.dim())
        throw std::invalid_argument("dimension mismatch");
    const int n = F.dim();
    LambdaFuncSeries out(n, N);
    for (long a = 0; a <= std::min(N, F.order()); ++a) {
        if (F[a].empty())
            continue;
        if (!fe_grading(F[a]).u1_invariant)
            throw std::invalid_argument("star_invariant requires U(1)-invariant coefficients");
        auto fparts = decompose_invariant(F[a]);
        for (long b = 0; a + b <= std::min(N, G.order() + a); ++b) {
            if (b > G.order() || G[b].empty())
                continue;
            if (!fe_grading(G[b]).u1_invariant)
                throw std::invalid_argument("star_invariant requires U(1)-invariant coefficients");
            auto gparts = decompose_invariant(G[b]);
            const long budget = N - a - b;
            for (const auto &[p, h1] : fparts)
                for (const auto &[q, h2] : gparts) {
                    LambdaFuncSeries s = star_hom(h1, h2, D, budget);
                    FuncExpr xs = FuncExpr::x_pow(n, p + q);
                    for (long k = 0; k <= budget; ++k)
                        out[a + b + k] += fe_mul(xs, s[k]);
                }
        }
    }
    return out;
}

} // namespace starred

#endif
