#ifndef STARRED_RANDOM_GEN_HPP
#define STARRED_RANDOM_GEN_HPP

#include "starred/func_expr.hpp"
#include "starred/star_product.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace starred {

/// Seeded instance generator for the property suites.  Uses mt19937_64 with
/// plain modulo draws so identical seeds give identical instances on every
/// platform.  Degrees and exponents stay small to keep exact arithmetic
/// affordable; see the suite configs for the bounds.
class InstanceGen {
  public:
    explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t draw(std::uint64_t bound) { return rng_() % bound; }

    /// Small pool of Q(i) coefficients, never zero.
    GaussianRational coeff() {
        static const GaussianRational pool[] = {
            GaussianRational(1),
            GaussianRational(-1),
            GaussianRational(2),
            GaussianRational(Rational(1, 2)),
            GaussianRational(Rational(-1, 2)),
            GaussianRational(Rational(0), Rational(1)),
            GaussianRational(Rational(0), Rational(-1)),
            GaussianRational(Rational(1), Rational(1)),
            GaussianRational(Rational(1, 2), Rational(-1, 2)),
            GaussianRational(3),
        };
        return pool[draw(sizeof(pool) / sizeof(pool[0]))];
    }

    /// Multi-index of length n+1 with |gamma| = total.
    std::vector<int> composition(int n, int total) {
        std::vector<int> g(static_cast<size_t>(n) + 1, 0);
        for (int j = 0; j < total; ++j)
            g[draw(static_cast<std::uint64_t>(n) + 1)] += 1;
        return g;
    }

    /// Polynomial in z, zbar only (no x), total degree <= 3 per block.
    FuncExpr polynomial(int n) {
        FuncExpr f(n);
        const int terms = 1 + static_cast<int>(draw(3));
        for (int t = 0; t < terms; ++t) {
            Monomial mo(composition(n, static_cast<int>(draw(4))),
                        composition(n, static_cast<int>(draw(4))), 0);
            f.add_term(std::move(mo), coeff());
        }
        return f;
    }

    /// U(1)-invariant: every term has |alpha| = |beta|, x exponent in [-2, 2].
    FuncExpr invariant(int n) {
        FuncExpr f(n);
        const int terms = 1 + static_cast<int>(draw(3));
        for (int t = 0; t < terms; ++t) {
            const int d = static_cast<int>(draw(3));
            Monomial mo(composition(n, d), composition(n, d),
                        static_cast<long>(draw(5)) - 2);
            f.add_term(std::move(mo), coeff());
        }
        return f;
    }

    /// Homogeneous of z-degree d: |alpha| = |beta| = d, m = -d.
    FuncExpr homogeneous(int n, int d) {
        FuncExpr f(n);
        const int terms = 1 + static_cast<int>(draw(2));
        for (int t = 0; t < terms; ++t) {
            Monomial mo(composition(n, d), composition(n, d), -d);
            f.add_term(std::move(mo), coeff());
        }
        return f;
    }

    FuncExpr homogeneous(int n) { return homogeneous(n, 1 + static_cast<int>(draw(2))); }

    /// Something with a U(1)-noninvariant term.
    FuncExpr noninvariant(int n) {
        for (;;) {
            FuncExpr f = polynomial(n);
            if (!fe_grading(f).u1_invariant && !f.empty())
                return f;
        }
    }

    LambdaFuncSeries invariant_series(int n, long order) {
        LambdaFuncSeries s(n, order);
        s[0] = invariant(n);
        // sprinkle one or two higher-order coefficients
        const long extra = static_cast<long>(draw(2)) + 1;
        for (long j = 0; j < extra; ++j)
            s[1 + static_cast<long>(draw(static_cast<std::uint64_t>(order)))] = invariant(n);
        return s;
    }

    DSeries dseries(long order) {
        TruncUniSeries d = TruncUniSeries::one(order);
        for (long r = 1; r <= order; ++r)
            if (draw(2) == 0)
                d[r] = coeff();
        return DSeries(std::move(d));
    }

    /// Pair (D, D') whose inverse series agree up to order k-1 and differ at
    /// order k.  Built by drawing the C sides and inverting them.
    std::pair<DSeries, DSeries> dseries_pair_with_divergence(long k, long order) {
        TruncUniSeries c = TruncUniSeries::one(order);
        for (long r = 1; r <= order; ++r)
            if (draw(2) == 0)
                c[r] = coeff();
        TruncUniSeries cp = c;
        cp[k] = c[k] + coeff(); // pool excludes zero, so the gap is nonzero
        for (long r = k + 1; r <= order; ++r)
            if (draw(2) == 0)
                cp[r] = coeff();
        return {DSeries(series_invert(c)), DSeries(series_invert(cp))};
    }

  private:
    std::mt19937_64 rng_;
};

} // namespace starred

#endif
