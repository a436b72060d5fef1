#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qumbral/numbers.hpp"
#include "qumbral/padic_lab.hpp"
#include "qumbral/polynomial.hpp"
#include "qumbral/qeuler.hpp"
#include "qumbral/series.hpp"

namespace qumbral {

using Json = nlohmann::ordered_json;

/// {"precision": N, "coeffs": ["c0", "c1", ...]} with rational strings.
Json series_json(const TruncatedSeries& f);

/// Coefficient array in ascending powers, as rational strings.
Json polynomial_json(const Polynomial& p);

/// {"q": "...", "zeta": "..."}.
Json weight_json(const QWeight& w);

/// {"weight": {...}, "numbers": [...], "polynomials": [[...], ...]}.
Json qeuler_table_json(const QWeight& w, const QEulerTable& table);

/// {"p": ..., "q": "...", "zeta": "...", "moment": ..., "rows":
///  [{"level": m, "valuation": v}, ...]}; an infinite valuation
/// serializes as the string "inf".
Json padic_report_json(const PAdicExperiment& exp, std::size_t moment,
                       const std::vector<std::pair<unsigned, Valuation>>& rows);

/// CSV mirror of the valuation report, columns level,valuation.
std::string padic_report_csv(const std::vector<std::pair<unsigned, Valuation>>& rows);

} // namespace qumbral
