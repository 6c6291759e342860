#ifndef STARRED_CLASSIFICATION_HPP
#define STARRED_CLASSIFICATION_HPP

#include "starred/reduction.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace starred {

enum class Verdict { Equivalent, NonEquivalent };

/// Outcome of comparing two reduced star products.  first_divergence is the
/// lowest order k with c_k != c'_k; delta = c_k - c'_k there.
struct ObstructionReport {
    std::optional<long> first_divergence;
    GaussianRational delta;
    std::vector<GaussianRational> c_params;      // c_1..c_N of D
    std::vector<GaussianRational> cprime_params; // c_1..c_N of D'
    Verdict verdict = Verdict::Equivalent;
};

namespace detail {

inline TruncUniSeries c_to_order(const DSeries &D, long N) {
    TruncUniSeries dN(N);
    for (long r = 0; r <= N; ++r)
        dN[r] = r <= D.order() ? D.d_coeff(r) : GaussianRational();
    return series_invert(dN);
}

inline std::optional<long> first_c_divergence(const DSeries &D, const DSeries &Dp, long N) {
    const TruncUniSeries c = c_to_order(D, N), cp = c_to_order(Dp, N);
    for (long k = 1; k <= N; ++k)
        if (!(c[k] == cp[k]))
            return k;
    return std::nullopt;
}

} // namespace detail

struct Lemma41Witness {
    long k;                 // first divergence of the c series
    GaussianRational delta; // c_k - c'_k
    bool holds;             // rows 0..k equal, row k+1 differs by delta in M_1 only
};

/// Coefficient-difference check on the K tables: rows agree through the first
/// c divergence k, and the row k+1 difference is (c_k - c'_k) in the M_1
/// column alone.
inline Lemma41Witness lemma41_check(const DSeries &D, const DSeries &Dp, long N) {
    auto k_opt = detail::first_c_divergence(D, Dp, N);
    if (!k_opt)
        throw std::invalid_argument("lemma41_check: D and D' agree to order N");
    const long k = *k_opt;
    if (k + 1 > N)
        throw std::invalid_argument("lemma41_check: truncation order too small (need k+1 <= N)");
    const TruncUniSeries c = detail::c_to_order(D, N), cp = detail::c_to_order(Dp, N);
    const GaussianRational delta = c[k] - cp[k];
    const KTable ta = k_table(D, N), tb = k_table(Dp, N);
    bool ok = true;
    for (long row = 0; row <= k && ok; ++row)
        for (long r = 0; r <= row; ++r)
            if (!(ta.at(row, r) == tb.at(row, r))) {
                ok = false;
                break;
            }
    if (ok)
        for (long r = 0; r <= k + 1; ++r) {
            const GaussianRational diff = ta.at(k + 1, r) - tb.at(k + 1, r);
            if (!(diff == (r == 1 ? delta : GaussianRational()))) {
                ok = false;
                break;
            }
        }
    return {k, delta, ok};
}

/// Default basis for operator comparisons on CP^n: z^i zbar^j x^{-1}.
inline std::vector<FuncExpr> degree_one_basis(int n) {
    std::vector<FuncExpr> basis;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            basis.push_back(fe_mul(fe_mul(FuncExpr::z(n, i), FuncExpr::zb(n, j)),
                                   FuncExpr::x_pow(n, -1)));
    return basis;
}

/// Same comparison pushed down to CP^n: the reduced bidifferential operators
/// agree through order k and diverge at k+1 by (c_k - c'_k) M~_1, verified on
/// every ordered basis pair through homogeneous representatives.
inline bool cor42_check(const DSeries &D, const DSeries &Dp, const ReductionContext &ctx, long N,
                        const std::vector<FuncExpr> &basis) {
    if (basis.empty())
        throw std::invalid_argument("cor42_check: empty basis");
    auto k_opt = detail::first_c_divergence(D, Dp, N);
    if (!k_opt)
        throw std::invalid_argument("cor42_check: D and D' agree to order N");
    const long k = *k_opt;
    if (k + 1 > N)
        throw std::invalid_argument("cor42_check: truncation order too small (need k+1 <= N)");
    const TruncUniSeries c = detail::c_to_order(D, N), cp = detail::c_to_order(Dp, N);
    const GaussianRational delta = c[k] - cp[k];
    const KTable ta = k_table(D, N), tb = k_table(Dp, N);
    for (const FuncExpr &phi : basis)
        for (const FuncExpr &psi : basis) {
            std::vector<FuncExpr> m_vals;
            for (long j = 0; j <= k + 1; ++j)
                m_vals.push_back(m_r_apply(j, phi, psi));
            for (long row = 1; row <= k + 1; ++row) {
                FuncExpr diff(ctx.n);
                for (long r = 0; r <= row; ++r)
                    diff += (ta.at(row, r) - tb.at(row, r)) * m_vals[static_cast<size_t>(r)];
                const FuncExpr want = row <= k ? FuncExpr::zero(ctx.n)
                                               : delta * m_vals[1];
                if (!fe_is_zero(diff - want))
                    return false;
            }
        }
    return true;
}

inline bool cor42_check(const DSeries &D, const DSeries &Dp, const ReductionContext &ctx, long N) {
    return cor42_check(D, Dp, ctx, N, degree_one_basis(ctx.n));
}

/// lambda^1 coefficient of (phi *^D_mu psi - psi *^D_mu phi)/2; the reduced
/// Poisson structure up to a factor, independent of D since K_1 = M_1.
inline FuncExpr first_order_extract(const DSeries &D, const ReductionContext &ctx,
                                    const ReducedElement &phi, const ReducedElement &psi) {
    const ReducedElement a = reduced_star(phi, psi, D, ctx, 1);
    const ReducedElement b = reduced_star(psi, phi, D, ctx, 1);
    return GaussianRational(Rational(1, 2)) * (a[1] - b[1]);
}

/// The decision procedure: *^D_mu and *^{D'}_mu are equivalent iff D = D'
/// (to the truncation order).  On divergence the report carries the first
/// divergent c order and the coefficient gap as the certificate.
inline ObstructionReport equivalence_verdict(const DSeries &D, const DSeries &Dp, long N) {
    ObstructionReport rep;
    const TruncUniSeries c = detail::c_to_order(D, N), cp = detail::c_to_order(Dp, N);
    for (long r = 1; r <= N; ++r) {
        rep.c_params.push_back(c[r]);
        rep.cprime_params.push_back(cp[r]);
    }
    auto k_opt = detail::first_c_divergence(D, Dp, N);
    if (!k_opt) {
        rep.verdict = Verdict::Equivalent;
        return rep;
    }
    rep.first_divergence = *k_opt;
    rep.delta = c[*k_opt] - cp[*k_opt];
    rep.verdict = Verdict::NonEquivalent;
    return rep;
}

} // namespace starred

#endif
