// Command line front end: star products, reduction, ideal division,
// non-equivalence classification and the seeded property suites.

#include "starred/check_suites.hpp"
#include "starred/classification.hpp"
#include "starred/format.hpp"
#include "starred/json_io.hpp"
#include "starred/parse.hpp"
#include "starred/reduction.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace starred;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    int n = 1;
    long order = 3;
    std::string mu = "-1/2";
    std::string d_text = "1";
    std::string dprime_text = "1";
    std::string format = "text";
};

void add_common(CLI::App *cmd, CommonOpts &o, bool with_dprime = false) {
    cmd->add_option("--n", o.n, "dimension n of CP^n");
    cmd->add_option("--order", o.order, "lambda truncation order N");
    cmd->add_option("--mu", o.mu, "momentum value, a negative rational like -1/2");
    cmd->add_option("--D", o.d_text, "D series, e.g. \"1 + l + 1/2*l^3\"");
    if (with_dprime)
        cmd->add_option("--Dprime", o.dprime_text, "second D series");
    cmd->add_option("--format", o.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

nlohmann::json config_json(const CommonOpts &o) {
    return {{"n", o.n}, {"order", o.order}, {"mu", o.mu}, {"D", o.d_text}};
}

void emit_series(const std::string &command, const CommonOpts &o, const LambdaFuncSeries &s) {
    if (o.format == "json") {
        nlohmann::json j{{"command", command}, {"config", config_json(o)},
                         {"result", lfs_to_json(s)}};
        std::cout << j.dump(2) << '\n';
    } else {
        for (long k = 0; k <= s.order(); ++k)
            std::cout << "l^" << k << ": " << fe_str(s[k]) << '\n';
    }
}

LambdaFuncSeries parse_series_or_expr(const std::string &text, int n, long order) {
    if (!text.empty() && text[0] == '[') {
        LambdaFuncSeries s = parse_lambda_series(text, n);
        if (s.order() >= order)
            return s;
        LambdaFuncSeries padded(n, order);
        for (long k = 0; k <= s.order(); ++k)
            padded[k] = s[k];
        return padded;
    }
    return LambdaFuncSeries::from_constant(parse_expr(text, n), order);
}

int cmd_star(const CommonOpts &o, const std::string &f_text, const std::string &g_text,
             bool reduced, bool wick) {
    const DSeries D = parse_dseries(o.d_text, o.order);
    const LambdaFuncSeries F = parse_series_or_expr(f_text, o.n, o.order);
    const LambdaFuncSeries G = parse_series_or_expr(g_text, o.n, o.order);
    if (reduced) {
        ReductionContext ctx(o.n, parse_rational(o.mu));
        ReducedElement phi{F}, psi{G};
        emit_series("star", o, reduced_star(phi, psi, D, ctx, o.order).series());
    } else if (wick) {
        emit_series("star", o, wick_product(F, G, o.order));
    } else {
        emit_series("star", o, star_invariant(F, G, D, o.order));
    }
    return kExitOk;
}

int cmd_reduce(const CommonOpts &o, const std::string &f_text) {
    ReductionContext ctx(o.n, parse_rational(o.mu));
    const LambdaFuncSeries F = parse_series_or_expr(f_text, o.n, o.order);
    emit_series("reduce", o, reduce_at_mu(F, ctx).series());
    return kExitOk;
}

int cmd_divide(const CommonOpts &o, const std::string &f_text) {
    ReductionContext ctx(o.n, parse_rational(o.mu));
    const DSeries D = parse_dseries(o.d_text, o.order);
    const LambdaFuncSeries F = parse_series_or_expr(f_text, o.n, o.order);
    try {
        emit_series("divide", o, ideal_divide(F, D, ctx, o.order));
    } catch (const NotInIdealError &e) {
        if (o.format == "json") {
            nlohmann::json j{{"command", "divide"}, {"config", config_json(o)},
                             {"result", {{"in_ideal", false}, {"reason", e.what()}}}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "membership refuted: " << e.what() << '\n';
        }
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_classify(const CommonOpts &o) {
    const DSeries D = parse_dseries(o.d_text, o.order);
    const DSeries Dp = parse_dseries(o.dprime_text, o.order);
    const ObstructionReport rep = equivalence_verdict(D, Dp, o.order);
    if (o.format == "json") {
        nlohmann::json cfg = config_json(o);
        cfg["Dprime"] = o.dprime_text;
        nlohmann::json j{{"command", "classify"}, {"config", cfg},
                         {"result", report_to_json(rep)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << report_str(rep);
    }
    return kExitOk;
}

int cmd_check(const CommonOpts &o, const std::string &suite, std::uint64_t seed, int count) {
    SuiteConfig cfg;
    cfg.n = o.n;
    cfg.order = o.order;
    cfg.mu = parse_rational(o.mu);
    cfg.D = parse_dseries(o.d_text, o.order);
    cfg.seed = seed;
    cfg.count = count;
    const SuiteResult res = run_suite(suite, cfg);
    if (o.format == "json") {
        nlohmann::json cfg_j = config_json(o);
        cfg_j["seed"] = seed;
        cfg_j["count"] = count;
        nlohmann::json j{{"command", "check"}, {"config", cfg_j},
                         {"result", {{"suite", res.name}, {"total", res.total},
                                     {"failed", res.failed}, {"failures", res.failures}}}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << suite_report(res);
    }
    return res.ok() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact star products on CP^n by U(1) phase space reduction"};
    app.require_subcommand(1);

    CommonOpts star_o, reduce_o, divide_o, classify_o, check_o;
    std::string f_text, g_text, reduce_f, divide_f, suite = "qmm";
    bool reduced = false, wick = false;
    std::uint64_t seed = 0;
    int count = 20;

    auto *star = app.add_subcommand("star", "multiply two functions or lambda series");
    add_common(star, star_o);
    star->add_option("--f", f_text, "left factor")->required();
    star->add_option("--g", g_text, "right factor")->required();
    star->add_flag("--reduced", reduced, "use the reduced product on CP^n");
    star->add_flag("--wick", wick, "use the plain Wick product");

    auto *reduce = app.add_subcommand("reduce", "restrict to the constraint surface");
    add_common(reduce, reduce_o);
    reduce->add_option("--F", reduce_f, "U(1)-invariant function or series")->required();

    auto *divide = app.add_subcommand("divide", "constructive ideal membership");
    add_common(divide, divide_o);
    divide->add_option("--F", divide_f, "candidate ideal element")->required();

    auto *classify = app.add_subcommand("classify", "equivalence verdict for two D series");
    add_common(classify, classify_o, true);

    auto *check = app.add_subcommand("check", "run a seeded property suite");
    add_common(check, check_o);
    check->add_option("--suite", suite,
                      "assoc-wick | axioms | assoc-invariant | assoc-reduced | qmm | "
                      "lemma41 | cor42 | closure")
        ->required();
    check->add_option("--seed", seed, "random seed");
    check->add_option("--count", count, "instances per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (star->parsed())
            return cmd_star(star_o, f_text, g_text, reduced, wick);
        if (reduce->parsed())
            return cmd_reduce(reduce_o, reduce_f);
        if (divide->parsed())
            return cmd_divide(divide_o, divide_f);
        if (classify->parsed())
            return cmd_classify(classify_o);
        if (check->parsed())
            return cmd_check(check_o, suite, seed, count);
    } catch (const starred::ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
