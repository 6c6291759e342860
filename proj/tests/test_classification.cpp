#include "starred/classification.hpp"
#include "starred/random_gen.hpp"

#include <catch_amalgamated.hpp>

using namespace starred;

namespace {

GaussianRational gr(long p, long q = 1) { return GaussianRational(Rational(p, q)); }

DSeries from_d(std::vector<long> tail, long N) {
    TruncUniSeries d = TruncUniSeries::one(N);
    for (size_t r = 0; r < tail.size(); ++r)
        d[static_cast<long>(r) + 1] = gr(tail[r]);
    return DSeries(std::move(d));
}

} // namespace

TEST_CASE("lemma41_check worked values") {
    // D = 1 vs D' = 1 + l: k = 1, delta = c_1 - c'_1 = 0 - (-1) = 1
    auto w = lemma41_check(from_d({}, 3), from_d({1}, 3), 3);
    CHECK(w.k == 1);
    CHECK(w.delta == gr(1));
    CHECK(w.holds);

    // identical series: precondition violated
    CHECK_THROWS_AS(lemma41_check(from_d({1}, 3), from_d({1}, 3), 3), std::invalid_argument);

    // D = 1 + l vs D' = 1 + l + 5 l^3: k = 3, delta = 5... c_3 = -1, c'_3 = -6
    auto w2 = lemma41_check(from_d({1, 0, 0, 0}, 5), from_d({1, 0, 5, 0}, 5), 5);
    CHECK(w2.k == 3);
    CHECK(w2.delta == gr(5));
    CHECK(w2.holds);

    // insufficient truncation: k + 1 > N
    CHECK_THROWS_AS(lemma41_check(from_d({0, 0, 1}, 3), from_d({}, 3), 3), std::invalid_argument);
}

TEST_CASE("lemma41 row difference acts as (c_k - c'_k) M_1") {
    InstanceGen gen(41);
    const int n = 1;
    for (int t = 0; t < 8; ++t) {
        const long k = 1 + static_cast<long>(gen.draw(3));
        const long N = k + 2;
        auto [D, Dp] = gen.dseries_pair_with_divergence(k, N);
        auto w = lemma41_check(D, Dp, N);
        REQUIRE(w.holds);
        const KTable ta = k_table(D, N), tb = k_table(Dp, N);
        FuncExpr f = gen.homogeneous(n), g = gen.homogeneous(n);
        FuncExpr diff(n);
        for (long r = 0; r <= k + 1; ++r)
            diff += (ta.at(k + 1, r) - tb.at(k + 1, r)) * m_r_apply(r, f, g);
        CHECK(fe_is_zero(diff - w.delta * m_r_apply(1, f, g)));
    }
}

TEST_CASE("k_table row agreement is characterized by c prefix agreement") {
    InstanceGen gen(43);
    const long N = 5;
    for (int t = 0; t < 10; ++t) {
        DSeries D = gen.dseries(N), Dp = gen.dseries(N);
        const KTable ta = k_table(D, N), tb = k_table(Dp, N);
        TruncUniSeries c = series_invert(D.d()), cp = series_invert(Dp.d());
        for (long k = 1; k <= N; ++k) {
            bool rows_agree = true;
            for (long row = 0; row <= k && rows_agree; ++row)
                for (long r = 0; r <= row; ++r)
                    if (!(ta.at(row, r) == tb.at(row, r))) {
                        rows_agree = false;
                        break;
                    }
            bool prefix_agree = true;
            for (long r = 1; r <= k - 1; ++r)
                if (!(c[r] == cp[r]))
                    prefix_agree = false;
            CHECK(rows_agree == prefix_agree);
        }
    }
}

TEST_CASE("cor42_check on CP^1 and CP^2 bases") {
    InstanceGen gen(45);
    // frozen worked pair
    ReductionContext c1(1, Rational(-1, 2));
    CHECK(cor42_check(from_d({}, 3), from_d({1}, 3), c1, 3));

    for (int t = 0; t < 4; ++t) {
        const long k = 1 + static_cast<long>(gen.draw(2));
        const long N = k + 2;
        auto [D, Dp] = gen.dseries_pair_with_divergence(k, N);
        CHECK(cor42_check(D, Dp, c1, N));
        ReductionContext c2(2, Rational(-1, 2));
        CHECK(cor42_check(D, Dp, c2, N));
    }

    // basis pairs with a constant entry are annihilated by the difference
    std::vector<FuncExpr> basis = degree_one_basis(1);
    basis.push_back(FuncExpr::one(1));
    CHECK(cor42_check(from_d({}, 3), from_d({1}, 3), c1, 3, basis));
}

TEST_CASE("first_order_extract") {
    InstanceGen gen(47);
    const int n = 1;
    ReductionContext ctx(n, Rational(-1, 2));
    DSeries D1 = DSeries::identity(3);
    DSeries D2 = from_d({3}, 3);

    ReducedElement phi = ReducedElement::from_constant(gen.homogeneous(n), 1);
    ReducedElement psi = ReducedElement::from_constant(gen.homogeneous(n), 1);

    // antisymmetry
    CHECK(fe_is_zero(first_order_extract(D1, ctx, phi, phi)));

    // D-independence
    CHECK(fe_is_zero(first_order_extract(D1, ctx, phi, psi) -
                     first_order_extract(D2, ctx, phi, psi)));

    // matches the brute-force M_1 antisymmetrization with the (-2mu)^{-1} weight
    FuncExpr za = fe_mul(fe_mul(FuncExpr::z(n, 0), FuncExpr::zb(n, 1)), FuncExpr::x_pow(n, -1));
    FuncExpr zc = fe_mul(fe_mul(FuncExpr::z(n, 1), FuncExpr::zb(n, 0)), FuncExpr::x_pow(n, -1));
    FuncExpr got = first_order_extract(D1, ctx, ReducedElement::from_constant(za, 1),
                                       ReducedElement::from_constant(zc, 1));
    FuncExpr want = gr(1, 2) * (m_r_apply(1, za, zc) - m_r_apply(1, zc, za));
    CHECK(fe_is_zero(got - want)); // (-2mu) = 1 here
}

TEST_CASE("first_order_extract satisfies Leibniz against the order-0 product") {
    InstanceGen gen(49);
    const int n = 1;
    ReductionContext ctx(n, Rational(-1, 2));
    DSeries D = gen.dseries(2);
    for (int t = 0; t < 5; ++t) {
        FuncExpr a = gen.homogeneous(n), b = gen.homogeneous(n), c = gen.homogeneous(n);
        auto re = [&](const FuncExpr &f) { return ReducedElement::from_constant(f, 1); };
        FuncExpr lhs = first_order_extract(D, ctx, re(fe_mul(a, b)), re(c));
        FuncExpr rhs = fe_mul(a, first_order_extract(D, ctx, re(b), re(c))) +
                       fe_mul(b, first_order_extract(D, ctx, re(a), re(c)));
        CHECK(fe_is_zero(lhs - rhs));
    }
}

TEST_CASE("equivalence_verdict") {
    const long N = 4;
    auto rep = equivalence_verdict(from_d({1, 2}, N), from_d({1, 2}, N), N);
    CHECK(rep.verdict == Verdict::Equivalent);
    CHECK_FALSE(rep.first_divergence.has_value());

    rep = equivalence_verdict(from_d({}, N), from_d({1}, N), N);
    CHECK(rep.verdict == Verdict::NonEquivalent);
    REQUIRE(rep.first_divergence.has_value());
    CHECK(*rep.first_divergence == 1);
    CHECK(rep.delta == gr(1));

    rep = equivalence_verdict(from_d({1, 0, 0, 0}, 5), from_d({1, 0, 5, 0}, 5), 5);
    CHECK(rep.verdict == Verdict::NonEquivalent);
    CHECK(*rep.first_divergence == 3);
    CHECK(rep.delta == gr(5));

    // verdict is equivalent iff the D series agree to order N
    InstanceGen gen(51);
    for (int t = 0; t < 20; ++t) {
        DSeries D = gen.dseries(3), Dp = gen.dseries(3);
        bool same = true;
        for (long r = 1; r <= 3; ++r)
            if (!(D.d_coeff(r) == Dp.d_coeff(r)))
                same = false;
        CHECK((equivalence_verdict(D, Dp, 3).verdict == Verdict::Equivalent) == same);
    }
}
