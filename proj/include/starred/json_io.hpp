#ifndef STARRED_JSON_IO_HPP
#define STARRED_JSON_IO_HPP

#include "starred/classification.hpp"
#include "starred/format.hpp"
#include "starred/func_expr.hpp"

#include <json.hpp>

#include <string>

namespace starred {

/// "re_p/re_q+im_p/im_qi", denominators always written, sign on the numerator.
inline std::string grat_json_str(const GaussianRational &c) {
    auto part = [](const Rational &q) {
        std::ostringstream os;
        os << numerator(q) << '/' << denominator(q);
        return os.str();
    };
    return part(c.re) + "+" + part(c.im) + "i";
}

inline nlohmann::json fe_to_json(const FuncExpr &f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[mo, c] : f.terms())
        terms.push_back({{"alpha", mo.alpha}, {"beta", mo.beta}, {"m", mo.m},
                         {"coeff", grat_json_str(c)}});
    return terms;
}

/// List over lambda orders of monomial records.
inline nlohmann::json lfs_to_json(const LambdaFuncSeries &s) {
    nlohmann::json orders = nlohmann::json::array();
    for (long k = 0; k <= s.order(); ++k)
        orders.push_back(fe_to_json(s[k]));
    return orders;
}

inline nlohmann::json report_to_json(const ObstructionReport &rep) {
    nlohmann::json j;
    j["verdict"] = verdict_str(rep.verdict);
    if (rep.first_divergence) {
        j["first_divergence"] = *rep.first_divergence;
        j["delta"] = grat_json_str(rep.delta);
    } else {
        j["first_divergence"] = nullptr;
    }
    nlohmann::json c = nlohmann::json::array(), cp = nlohmann::json::array();
    for (const auto &v : rep.c_params)
        c.push_back(grat_json_str(v));
    for (const auto &v : rep.cprime_params)
        cp.push_back(grat_json_str(v));
    j["c"] = c;
    j["c_prime"] = cp;
    return j;
}

} // namespace starred

#endif
