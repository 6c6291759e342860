#ifndef STARRED_GAUSSIAN_RATIONAL_HPP
#define STARRED_GAUSSIAN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>

namespace starred {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Q(i): re + im*i with exact rational parts.
/// cpp_rational keeps lowest terms and positive denominator on its own.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re == b.re && a.im == b.im;
    }

    friend GaussianRational operator+(const GaussianRational &a, const GaussianRational &b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational &a, const GaussianRational &b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational &a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational &a, const GaussianRational &b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0)
            throw std::domain_error("division by zero in Q(i)");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    GaussianRational &operator+=(const GaussianRational &b) { return *this = *this + b; }
    GaussianRational &operator-=(const GaussianRational &b) { return *this = *this - b; }
    GaussianRational &operator*=(const GaussianRational &b) { return *this = *this * b; }
    GaussianRational &operator/=(const GaussianRational &b) { return *this = *this / b; }
};

/// q^e for integer e (negative allowed, q != 0 then).
inline Rational rational_pow(const Rational &q, long e) {
    if (e == 0)
        return Rational(1);
    if (e < 0) {
        if (q == 0)
            throw std::domain_error("0 raised to a negative power");
        return Rational(1) / rational_pow(q, -e);
    }
    Rational r(1), b = q;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1)
            r *= b;
        b *= b;
    }
    return r;
}

inline GaussianRational grat_pow(const GaussianRational &q, long e) {
    if (e < 0) {
        GaussianRational one{Rational(1)};
        return one / grat_pow(q, -e);
    }
    GaussianRational r{Rational(1)}, b = q;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1)
            r *= b;
        b *= b;
    }
    return r;
}

inline Rational factorial(long n) {
    Integer f = 1;
    for (long k = 2; k <= n; ++k)
        f *= k;
    return Rational(f);
}

} // namespace starred

#endif
