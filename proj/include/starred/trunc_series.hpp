#ifndef STARRED_TRUNC_SERIES_HPP
#define STARRED_TRUNC_SERIES_HPP

#include "starred/gaussian_rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace starred {

/// Truncated univariate formal power series over Q(i).
/// Coefficients are indexed 0..N; every result is exact modulo the
/// truncation variable to the power N+1.
class TruncUniSeries {
  public:
    explicit TruncUniSeries(long order) : coeffs_(static_cast<size_t>(order) + 1) {
        if (order < 0)
            throw std::invalid_argument("truncation order must be non-negative");
    }
    TruncUniSeries(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("series needs at least the constant coefficient");
    }

    static TruncUniSeries one(long order) {
        TruncUniSeries s(order);
        s.coeffs_[0] = GaussianRational(1);
        return s;
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const GaussianRational &operator[](long k) const { return coeffs_.at(static_cast<size_t>(k)); }
    GaussianRational &operator[](long k) { return coeffs_.at(static_cast<size_t>(k)); }

    friend bool operator==(const TruncUniSeries &a, const TruncUniSeries &b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    std::vector<GaussianRational> coeffs_;
};

inline TruncUniSeries series_add(const TruncUniSeries &a, const TruncUniSeries &b) {
    long n = std::min(a.order(), b.order());
    TruncUniSeries r(n);
    for (long k = 0; k <= n; ++k)
        r[k] = a[k] + b[k];
    return r;
}

inline TruncUniSeries series_scale(const GaussianRational &s, const TruncUniSeries &a) {
    TruncUniSeries r(a.order());
    for (long k = 0; k <= a.order(); ++k)
        r[k] = s * a[k];
    return r;
}

/// Cauchy product, truncated at the smaller operand order.
inline TruncUniSeries series_mul(const TruncUniSeries &a, const TruncUniSeries &b) {
    long n = std::min(a.order(), b.order());
    TruncUniSeries r(n);
    for (long k = 0; k <= n; ++k)
        for (long j = 0; j <= k; ++j)
            r[k] += a[j] * b[k - j];
    return r;
}

/// Multiplicative inverse of a series with constant term 1,
/// c_0 = 1, c_k = -sum_{j=1..k} d_j c_{k-j}.
inline TruncUniSeries series_invert(const TruncUniSeries &d) {
    if (!(d[0] == GaussianRational(1)))
        throw std::invalid_argument("series_invert requires constant term 1");
    TruncUniSeries c(d.order());
    c[0] = GaussianRational(1);
    for (long k = 1; k <= d.order(); ++k) {
        GaussianRational s;
        for (long j = 1; j <= k; ++j)
            s += d[j] * c[k - j];
        c[k] = -s;
    }
    return c;
}

/// The scalar series (1/r!) (u C(u))^r prod_{s=1..r} (1 + s u C(u))^{-1}
/// expanded in u to order N.  c holds C(u) with constant term 1.
inline TruncUniSeries product_of_inverses(long r, const TruncUniSeries &c, long N) {
    if (r < 0)
        throw std::invalid_argument("product_of_inverses: r must be non-negative");
    // v = u C(u), a series with zero constant term.
    TruncUniSeries v(N);
    for (long k = 1; k <= N; ++k)
        v[k] = (k - 1 <= c.order()) ? c[k - 1] : GaussianRational();
    TruncUniSeries acc = TruncUniSeries::one(N);
    for (long j = 0; j < r; ++j)
        acc = series_mul(acc, v);
    acc = series_scale(GaussianRational(Rational(1) / factorial(r)), acc);
    for (long s = 1; s <= r; ++s) {
        TruncUniSeries f = series_add(TruncUniSeries::one(N), series_scale(GaussianRational(s), v));
        acc = series_mul(acc, series_invert(f));
    }
    return acc;
}

} // namespace starred

#endif
