#ifndef STARRED_REDUCTION_HPP
#define STARRED_REDUCTION_HPP

#include "starred/star_product.hpp"

#include <map>
#include <stdexcept>

namespace starred {

/// Fixed data of the U(1) reduction: dimension n and the momentum value
/// mu < 0.  The constraint surface is the sphere x = -2 mu.
struct ReductionContext {
    int n;
    Rational mu;

    ReductionContext(int n_, Rational mu_) : n(n_), mu(std::move(mu_)) {
        if (!(mu < 0))
            throw std::invalid_argument("mu must be negative");
    }

    Rational level() const { return -2 * mu; } // -2 mu > 0
};

/// Element of C^inf(CP^n)[[lambda]], carried by homogeneous representatives.
class ReducedElement {
  public:
    explicit ReducedElement(LambdaFuncSeries series) : series_(std::move(series)) {
        for (long k = 0; k <= series_.order(); ++k)
            if (!fe_grading(series_[k]).homogeneous)
                throw std::invalid_argument("reduced element needs homogeneous coefficients");
    }

    static ReducedElement from_constant(FuncExpr f, long order) {
        return ReducedElement(LambdaFuncSeries::from_constant(std::move(f), order));
    }
    static ReducedElement one(int n, long order) {
        return from_constant(FuncExpr::one(n), order);
    }

    const LambdaFuncSeries &series() const { return series_; }
    int dim() const { return series_.dim(); }
    long order() const { return series_.order(); }
    const FuncExpr &operator[](long k) const { return series_[k]; }

  private:
    LambdaFuncSeries series_;
};

inline bool reduced_equal(const ReducedElement &a, const ReducedElement &b) {
    return lfs_equal(a.series(), b.series());
}

/// J = -x/2, the classical momentum map of the U(1)-action.
inline FuncExpr momentum_map(int n) {
    return GaussianRational(Rational(-1, 2)) * FuncExpr::x_pow(n, 1);
}

/// S_D J = D(lambda/x) J = -(x + sum_r d_r lambda^r x^{1-r}) / 2.
inline LambdaFuncSeries quantum_momentum(int n, const DSeries &D, long N) {
    LambdaFuncSeries s(n, N);
    s[0] = momentum_map(n);
    for (long r = 1; r <= N; ++r) {
        const GaussianRational dr = r <= D.order() ? D.d_coeff(r) : GaussianRational();
        if (!dr.is_zero())
            s[r] = (GaussianRational(Rational(-1, 2)) * dr) * FuncExpr::x_pow(n, 1 - r);
    }
    return s;
}

/// Generator of the two-sided ideal: S_D J - D(lambda/(-2mu)) mu.  Radial,
/// and it vanishes on the constraint surface x = -2mu at every lambda order.
inline LambdaFuncSeries ideal_generator(const DSeries &D, const ReductionContext &ctx, long N) {
    LambdaFuncSeries s = quantum_momentum(ctx.n, D, N);
    const Rational t = ctx.level();
    s[0] -= FuncExpr::constant(ctx.n, GaussianRational(ctx.mu));
    for (long r = 1; r <= N; ++r) {
        const GaussianRational dr = r <= D.order() ? D.d_coeff(r) : GaussianRational();
        if (!dr.is_zero())
            s[r] -= FuncExpr::constant(ctx.n, dr * GaussianRational(ctx.mu * rational_pow(t, -r)));
    }
    return s;
}

/// Restriction to the constraint surface followed by the quotient to CP^n:
/// each lambda coefficient sum_p h_p x^p maps to sum_p h_p (-2mu)^p.
inline ReducedElement reduce_at_mu(const LambdaFuncSeries &F, const ReductionContext &ctx) {
    LambdaFuncSeries out(F.dim(), F.order());
    const Rational t = ctx.level();
    for (long k = 0; k <= F.order(); ++k) {
        if (!fe_grading(F[k]).u1_invariant)
            throw std::invalid_argument("reduce_at_mu requires U(1)-invariant coefficients");
        for (const auto &[p, h] : decompose_invariant(F[k]))
            out[k] += GaussianRational(rational_pow(t, p)) * h;
    }
    return ReducedElement(std::move(out));
}

/// Thrown when ideal membership is refuted (F_mu != 0).
struct NotInIdealError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Exact division of an invariant expression R with R(x = -2mu) semantically
/// zero by (J - mu) = -(x + 2mu)/2.  Writes R as a Laurent polynomial in x
/// with homogeneous coefficients, subtracts the evaluation at -2mu (a
/// semantically-zero rewriting) and divides synthetically by (x + 2mu).
inline FuncExpr divide_by_j_minus_mu(const FuncExpr &R, const ReductionContext &ctx) {
    const int n = R.dim();
    if (R.empty())
        return FuncExpr::zero(n);
    auto parts = decompose_invariant(R);
    const Rational t = ctx.level();
    FuncExpr ev(n);
    for (const auto &[p, h] : parts)
        ev += GaussianRational(rational_pow(t, p)) * h;
    if (!fe_is_zero(ev))
        throw NotInIdealError("not in the ideal: F_mu != 0");
    const long pmin = parts.begin()->first;
    const long pmax = parts.rbegin()->first;
    // Work with P(x) = R x^{-pmin}, an honest polynomial in x.  Its value at
    // x = -2mu is t^{-pmin} ev, again semantically zero; subtracting it from
    // the constant coefficient rewrites R without changing the function.
    std::vector<FuncExpr> B(static_cast<size_t>(pmax - pmin) + 1, FuncExpr(n));
    for (const auto &[p, h] : parts)
        B[static_cast<size_t>(p - pmin)] += h;
    B[0] -= GaussianRational(rational_pow(t, -pmin)) * ev;
    // synthetic division of P by (x - t), t = -2mu; remainder is zero termwise
    const GaussianRational teval{t};
    const long d = pmax - pmin;
    std::vector<FuncExpr> Q(static_cast<size_t>(std::max<long>(d, 1)), FuncExpr(n));
    FuncExpr carry(n);
    for (long j = d; j >= 1; --j) {
        carry = B[static_cast<size_t>(j)] + teval * carry;
        Q[static_cast<size_t>(j - 1)] = carry;
    }
    // remainder B_0 + t * carry vanishes exactly by construction
    FuncExpr quot(n);
    for (long j = 0; j < d; ++j)
        quot += fe_mul(FuncExpr::x_pow(n, j + pmin), Q[static_cast<size_t>(j)]);
    return GaussianRational(Rational(-2)) * quot;
}

} // namespace detail

/// Constructive ideal membership: returns G with G *^D generator = F
/// (exactly as functions, per lambda order).  Since the generator is radial
/// the star product with it is the pointwise series product, so G solves
/// G * gen = F order by order, each stage a Hadamard division by (J - mu).
inline LambdaFuncSeries ideal_divide(const LambdaFuncSeries &F, const DSeries &D,
                                     const ReductionContext &ctx, long N) {
    const LambdaFuncSeries gen = ideal_generator(D, ctx, N);
    LambdaFuncSeries G(F.dim(), N);
    for (long k = 0; k <= N; ++k) {
        FuncExpr R = k <= F.order() ? F[k] : FuncExpr::zero(F.dim());
        if (!fe_grading(R).u1_invariant)
            throw std::invalid_argument("ideal_divide requires U(1)-invariant coefficients");
        for (long j = 0; j < k; ++j)
            R -= fe_mul(G[j], gen[k - j]);
        G[k] = detail::divide_by_j_minus_mu(R, ctx);
    }
    return G;
}

/// phi *^D_mu psi: lambda^k coefficient is
/// sum_{a+b+r=k} (-2mu)^{-r} sum_{j<=r} a_{r,j} M_j(phi_a, psi_b).
inline ReducedElement reduced_star(const ReducedElement &phi, const ReducedElement &psi,
                                   const DSeries &D, const ReductionContext &ctx, long N) {
    if (phi.dim() != psi.dim())
        throw std::invalid_argument("dimension mismatch");
    const int n = phi.dim();
    const KTable t = k_table(D, N);
    const Rational lvl = ctx.level();
    LambdaFuncSeries out(n, N);
    for (long a = 0; a <= std::min(N, phi.order()); ++a) {
        if (phi[a].empty())
            continue;
        for (long b = 0; a + b <= N; ++b) {
            if (b > psi.order() || psi[b].empty())
                continue;
            const long budget = N - a - b;
            std::vector<FuncExpr> m_vals;
            for (long j = 0; j <= budget; ++j)
                m_vals.push_back(m_r_apply(j, phi[a], psi[b]));
            for (long r = 0; r <= budget; ++r) {
                FuncExpr row(n);
                for (long j = 0; j <= r; ++j)
                    row += t.at(r, j) * m_vals[static_cast<size_t>(j)];
                out[a + b + r] += GaussianRational(rational_pow(lvl, -r)) * row;
            }
        }
    }
    return ReducedElement(std::move(out));
}

} // namespace starred

#endif
