#include "qumbral/io.hpp"

namespace qumbral {

Json series_json(const TruncatedSeries& f) {
    Json coeffs = Json::array();
    for (std::size_t k = 0; k <= f.precision(); ++k)
        coeffs.push_back(f.coeff(k).str());
    return Json{{"precision", f.precision()}, {"coeffs", std::move(coeffs)}};
}

Json polynomial_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (int k = 0; k <= p.degree(); ++k)
        coeffs.push_back(p.coeff(static_cast<std::size_t>(k)).str());
    return coeffs;
}

Json weight_json(const QWeight& w) {
    return Json{{"q", w.q().str()}, {"zeta", w.zeta().str()}};
}

Json qeuler_table_json(const QWeight& w, const QEulerTable& table) {
    Json numbers = Json::array();
    for (const Rational& e : table.numbers)
        numbers.push_back(e.str());
    Json polys = Json::array();
    for (const Polynomial& p : table.polynomials)
        polys.push_back(polynomial_json(p));
    return Json{{"weight", weight_json(w)}, {"numbers", std::move(numbers)},
                {"polynomials", std::move(polys)}};
}

namespace {

Json valuation_json(const Valuation& v) {
    if (v.is_infinite())
        return Json("inf");
    return Json(v.value());
}

} // namespace

Json padic_report_json(const PAdicExperiment& exp, std::size_t moment,
                       const std::vector<std::pair<unsigned, Valuation>>& rows) {
    Json out{{"p", exp.p},
             {"q", exp.weight.q().str()},
             {"zeta", exp.weight.zeta().str()},
             {"moment", moment}};
    Json jrows = Json::array();
    for (const auto& [level, v] : rows)
        jrows.push_back(Json{{"level", level}, {"valuation", valuation_json(v)}});
    out["rows"] = std::move(jrows);
    return out;
}

std::string padic_report_csv(const std::vector<std::pair<unsigned, Valuation>>& rows) {
    std::string out = "level,valuation\n";
    for (const auto& [level, v] : rows)
        out += std::to_string(level) + "," + v.str() + "\n";
    return out;
}

} // namespace qumbral
