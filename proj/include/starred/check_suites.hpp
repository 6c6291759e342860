#ifndef STARRED_CHECK_SUITES_HPP
#define STARRED_CHECK_SUITES_HPP

#include "starred/classification.hpp"
#include "starred/format.hpp"
#include "starred/random_gen.hpp"
#include "starred/reduction.hpp"

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace starred {

struct SuiteConfig {
    int n = 1;
    long order = 3;
    Rational mu = Rational(-1, 2);
    DSeries D = DSeries::identity(3);
    std::uint64_t seed = 0;
    int count = 20;
};

struct SuiteResult {
    std::string name;
    int total = 0;
    int failed = 0;
    std::vector<std::string> failures; // reproducible witnesses, input grammar

    bool ok() const { return failed == 0; }
};

namespace suites {

inline LambdaFuncSeries as_series(const FuncExpr &f, long N) {
    return LambdaFuncSeries::from_constant(f, N);
}

/// (F*G)*H = F*(G*H) for the Wick product on random polynomials.
inline SuiteResult assoc_wick(const SuiteConfig &cfg) {
    SuiteResult res{"assoc-wick"};
    InstanceGen gen(cfg.seed);
    for (int t = 0; t < cfg.count; ++t) {
        ++res.total;
        FuncExpr F = gen.polynomial(cfg.n), G = gen.polynomial(cfg.n), H = gen.polynomial(cfg.n);
        LambdaFuncSeries lhs = wick_product(wick_product(F, G, cfg.order), as_series(H, cfg.order), cfg.order);
        LambdaFuncSeries rhs = wick_product(as_series(F, cfg.order), wick_product(G, H, cfg.order), cfg.order);
        if (!lfs_equal(lhs, rhs)) {
            ++res.failed;
            res.failures.push_back("F=" + fe_str(F) + " G=" + fe_str(G) + " H=" + fe_str(H));
        }
    }
    return res;
}

/// Zeroth order pointwise; first order commutator = (i/2){F,G}.
inline SuiteResult star_axioms(const SuiteConfig &cfg) {
    SuiteResult res{"axioms"};
    InstanceGen gen(cfg.seed);
    const GaussianRational half_i(Rational(0), Rational(1, 2));
    for (int t = 0; t < cfg.count; ++t) {
        ++res.total;
        FuncExpr F = gen.polynomial(cfg.n), G = gen.polynomial(cfg.n);
        LambdaFuncSeries fg = wick_product(F, G, cfg.order);
        LambdaFuncSeries gf = wick_product(G, F, cfg.order);
        bool ok = fe_is_zero(fg[0] - fe_mul(F, G));
        ok = ok && fe_is_zero((fg[1] - gf[1]) - half_i * poisson_bracket(F, G));
        if (!ok) {
            ++res.failed;
            res.failures.push_back("F=" + fe_str(F) + " G=" + fe_str(G));
        }
    }
    return res;
}

/// F*J - J*F = (i lambda/2){F,J} exactly at every order, D = 1 (Wick).
inline SuiteResult qmm(const SuiteConfig &cfg) {
    SuiteResult res{"qmm"};
    InstanceGen gen(cfg.seed);
    const FuncExpr J = momentum_map(cfg.n);
    const GaussianRational half_i(Rational(0), Rational(1, 2));
    for (int t = 0; t < cfg.count; ++t) {
        ++res.total;
        FuncExpr F = gen.noninvariant(cfg.n);
        LambdaFuncSeries comm = wick_product(F, J, cfg.order) - wick_product(J, F, cfg.order);
        LambdaFuncSeries want(cfg.n, cfg.order);
        if (cfg.order >= 1)
            want[1] = half_i * poisson_bracket(F, J);
        if (!lfs_equal(comm, want)) {
            ++res.failed;
            res.failures.push_back("F=" + fe_str(F));
        }
    }
    return res;
}

/// Wick products of invariant pairs stay invariant at every lambda order.
inline SuiteResult closure(const SuiteConfig &cfg) {
    SuiteResult res{"closure"};
    InstanceGen gen(cfg.seed);
    for (int t = 0; t < cfg.count; ++t) {
        ++res.total;
        FuncExpr F = gen.invariant(cfg.n), G = gen.invariant(cfg.n);
        LambdaFuncSeries fg = wick_product(F, G, cfg.order);
        bool ok = true;
        for (long k = 0; k <= cfg.order; ++k)
            ok = ok && fe_grading(fg[k]).u1_invariant;
        if (!ok) {
            ++res.failed;
            res.failures.push_back("F=" + fe_str(F) + " G=" + fe_str(G));
        }
    }
    return res;
}

/// *^D associativity on random invariant series triples.
inline SuiteResult assoc_invariant(const SuiteConfig &cfg) {
    SuiteResult res{"assoc-invariant"};
    InstanceGen gen(cfg.seed);
    for (int t = 0; t < cfg.count; ++t) {
        ++res.total;
        LambdaFuncSeries F = gen.invariant_series(cfg.n, cfg.order);
        LambdaFuncSeries G = gen.invariant_series(cfg.n, cfg.order);
        LambdaFuncSeries H = gen.invariant_series(cfg.n, cfg.order);
        LambdaFuncSeries lhs = star_invariant(star_invariant(F, G, cfg.D, cfg.order), H, cfg.D, cfg.order);
        LambdaFuncSeries rhs = star_invariant(F, star_invariant(G, H, cfg.D, cfg.order), cfg.D, cfg.order);
        if (!lfs_equal(lhs, rhs)) {
            ++res.failed;
            res.failures.push_back("F=" + lfs_str(F) + " G=" + lfs_str(G) + " H=" + lfs_str(H));
        }
    }
    return res;
}

/// *^D_mu associativity on random reduced elements.
inline SuiteResult assoc_reduced(const SuiteConfig &cfg) {
    SuiteResult res{"assoc-reduced"};
    InstanceGen gen(cfg.seed);
    ReductionContext ctx(cfg.n, cfg.mu);
    for (int t = 0; t < cfg.count; ++t) {
        ++res.total;
        ReducedElement phi = ReducedElement::from_constant(gen.homogeneous(cfg.n), cfg.order);
        ReducedElement psi = ReducedElement::from_constant(gen.homogeneous(cfg.n), cfg.order);
        ReducedElement chi = ReducedElement::from_constant(gen.homogeneous(cfg.n), cfg.order);
        ReducedElement lhs =
            reduced_star(reduced_star(phi, psi, cfg.D, ctx, cfg.order), chi, cfg.D, ctx, cfg.order);
        ReducedElement rhs =
            reduced_star(phi, reduced_star(psi, chi, cfg.D, ctx, cfg.order), cfg.D, ctx, cfg.order);
        if (!reduced_equal(lhs, rhs)) {
            ++res.failed;
            res.failures.push_back("phi=" + fe_str(phi[0]) + " psi=" + fe_str(psi[0]) +
                                   " chi=" + fe_str(chi[0]));
        }
    }
    return res;
}

/// Coefficient-difference identity on the K tables for random (D, D') pairs
/// with prescribed first divergence.
inline SuiteResult lemma41(const SuiteConfig &cfg) {
    SuiteResult res{"lemma41"};
    InstanceGen gen(cfg.seed);
    for (int t = 0; t < cfg.count; ++t) {
        ++res.total;
        const long k = 1 + static_cast<long>(gen.draw(3));
        const long N = k + 2;
        auto [D, Dp] = gen.dseries_pair_with_divergence(k, N);
        if (!lemma41_check(D, Dp, N).holds) {
            ++res.failed;
            res.failures.push_back("D=" + dseries_str(D) + " D'=" + dseries_str(Dp));
        }
    }
    return res;
}

/// Reduced operator identity on the degree-1 basis for the same pairs.
inline SuiteResult cor42(const SuiteConfig &cfg) {
    SuiteResult res{"cor42"};
    InstanceGen gen(cfg.seed);
    ReductionContext ctx(cfg.n, cfg.mu);
    for (int t = 0; t < cfg.count; ++t) {
        ++res.total;
        const long k = 1 + static_cast<long>(gen.draw(2));
        const long N = k + 2;
        auto [D, Dp] = gen.dseries_pair_with_divergence(k, N);
        if (!cor42_check(D, Dp, ctx, N)) {
            ++res.failed;
            res.failures.push_back("D=" + dseries_str(D) + " D'=" + dseries_str(Dp));
        }
    }
    return res;
}

} // namespace suites

inline SuiteResult run_suite(const std::string &name, const SuiteConfig &cfg) {
    if (name == "assoc-wick")
        return suites::assoc_wick(cfg);
    if (name == "axioms")
        return suites::star_axioms(cfg);
    if (name == "assoc-invariant")
        return suites::assoc_invariant(cfg);
    if (name == "assoc-reduced")
        return suites::assoc_reduced(cfg);
    if (name == "qmm")
        return suites::qmm(cfg);
    if (name == "lemma41")
        return suites::lemma41(cfg);
    if (name == "cor42")
        return suites::cor42(cfg);
    if (name == "closure")
        return suites::closure(cfg);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

inline std::string suite_report(const SuiteResult &res) {
    std::ostringstream os;
    os << "suite " << res.name << ": " << (res.total - res.failed) << "/" << res.total
       << " passed" << (res.ok() ? "" : " FAIL") << '\n';
    for (const auto &w : res.failures)
        os << "  failing instance: " << w << '\n';
    return os.str();
}

} // namespace starred

#endif
