#include "starred/trunc_series.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace starred;

namespace {

GaussianRational gr(long p, long q = 1) { return GaussianRational(Rational(p, q)); }

TruncUniSeries make(std::vector<long> nums) {
    TruncUniSeries s(static_cast<long>(nums.size()) - 1);
    for (size_t k = 0; k < nums.size(); ++k)
        s[static_cast<long>(k)] = gr(nums[k]);
    return s;
}

TruncUniSeries random_unit_series(std::mt19937_64 &rng, long N) {
    TruncUniSeries s = TruncUniSeries::one(N);
    for (long k = 1; k <= N; ++k)
        s[k] = GaussianRational(Rational(static_cast<long>(rng() % 7) - 3,
                                         1 + static_cast<long>(rng() % 3)),
                                Rational(static_cast<long>(rng() % 5) - 2));
    return s;
}

} // namespace

TEST_CASE("series_mul basics") {
    // (1+l)(1-l) = 1 - l^2 at N=2
    TruncUniSeries a = make({1, 1, 0}), b = make({1, -1, 0});
    CHECK(series_mul(a, b) == make({1, 0, -1}));

    // 1 * s = s
    TruncUniSeries s = make({1, 2, 3, 4});
    CHECK(series_mul(TruncUniSeries::one(3), s) == s);

    // (1+l+l^2)^2 = 1 + 2l + 3l^2 at N=2
    TruncUniSeries c = make({1, 1, 1});
    CHECK(series_mul(c, c) == make({1, 2, 3}));

    // truncation at the smaller operand order
    CHECK(series_mul(make({1, 1}), make({1, 1, 1})).order() == 1);
}

TEST_CASE("series_invert worked values") {
    CHECK(series_invert(TruncUniSeries::one(3)) == TruncUniSeries::one(3));
    // D = 1 + l: geometric series
    CHECK(series_invert(make({1, 1, 0, 0})) == make({1, -1, 1, -1}));
    // D = 1 + l + l^2: recursion c_k = -sum d_j c_{k-j}
    CHECK(series_invert(make({1, 1, 1, 0})) == make({1, -1, 0, 1}));

    CHECK_THROWS_AS(series_invert(make({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(series_invert(make({0, 1})), std::invalid_argument);
}

TEST_CASE("series_invert properties") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 30; ++t) {
        TruncUniSeries d = random_unit_series(rng, 5);
        TruncUniSeries c = series_invert(d);
        CHECK(series_mul(d, c) == TruncUniSeries::one(5));
        CHECK(series_invert(c) == d);
    }
}

TEST_CASE("product_of_inverses worked values") {
    TruncUniSeries c1 = TruncUniSeries::one(3);
    CHECK(product_of_inverses(0, c1, 3) == TruncUniSeries::one(3));
    // r=1, C=1: u/(1+u) = u - u^2 + u^3
    CHECK(product_of_inverses(1, c1, 3) == make({0, 1, -1, 1}));
    // r=2, C=1: (1/2)u^2 (1+u)^{-1} (1+2u)^{-1} = u^2/2 - (3/2)u^3
    TruncUniSeries r2 = product_of_inverses(2, c1, 3);
    CHECK(r2[0] == gr(0));
    CHECK(r2[1] == gr(0));
    CHECK(r2[2] == gr(1, 2));
    CHECK(r2[3] == gr(-3, 2));
}

TEST_CASE("product_of_inverses vanishing order and leading coefficient") {
    std::mt19937_64 rng(7);
    const long N = 5;
    for (int t = 0; t < 10; ++t) {
        TruncUniSeries c = series_invert(random_unit_series(rng, N));
        for (long r = 0; r <= N; ++r) {
            TruncUniSeries p = product_of_inverses(r, c, N);
            for (long k = 0; k < r; ++k)
                CHECK(p[k] == gr(0));
            CHECK(p[r] == GaussianRational(Rational(1) / factorial(r)));
        }
    }
}
