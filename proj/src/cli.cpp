#include "qumbral/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qumbral/errors.hpp"
#include "qumbral/io.hpp"
#include "qumbral/qeuler.hpp"
#include "qumbral/umbral.hpp"

namespace qumbral {

namespace {

struct CheckResult {
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}
    std::string name;
    bool pass = true;
    std::string detail; // filled on failure: parameter point plus both sides
};

void fail(CheckResult& r, std::string detail) {
    r.pass = false;
    r.detail = std::move(detail);
}

CheckResult check_recurrence(const QEulerContext& ctx, std::size_t n_max) {
    CheckResult r{"recurrence"};
    QEulerTable table = qeuler_polynomials(ctx, n_max);
    Polynomial current = table.polynomials[0];
    for (std::size_t n = 1; n <= n_max; ++n) {
        current = theorem1_step(ctx, current);
        if (current != table.polynomials[n]) {
            fail(r, "n=" + std::to_string(n) + " lhs=" + current.str() +
                    " rhs=" + table.polynomials[n].str());
            return r;
        }
    }
    return r;
}

CheckResult check_functional_equation(const QEulerContext& ctx, std::size_t n_max) {
    CheckResult r{"functional-equation"};
    QEulerTable table = qeuler_polynomials(ctx, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (!functional_equation_check(ctx, n)) {
            Polynomial lhs = ctx.weight().qzeta() * table.polynomials[n].shift(Rational(1)) +
                             table.polynomials[n];
            Polynomial rhs = Polynomial::monomial(n, ctx.weight().two_bracket());
            fail(r, "n=" + std::to_string(n) + " lhs=" + lhs.str() + " rhs=" + rhs.str());
            return r;
        }
    }
    return r;
}

CheckResult check_binomial(const QEulerContext& ctx, std::size_t n_max) {
    CheckResult r{"binomial-numbers"};
    QEulerTable table = qeuler_polynomials(ctx, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<Rational> coeffs(n + 1);
        for (std::size_t l = 0; l <= n; ++l)
            coeffs[l] = Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(l))) *
                        table.numbers[n - l];
        Polynomial rhs(std::move(coeffs));
        if (table.polynomials[n] != rhs) {
            fail(r, "n=" + std::to_string(n) + " lhs=" + table.polynomials[n].str() +
                    " rhs=" + rhs.str());
            return r;
        }
    }
    return r;
}

CheckResult check_order_k_binomial(const QEulerContext& ctx, const std::vector<unsigned>& k_list,
                                   std::size_t n_max) {
    CheckResult r{"order-k-binomial"};
    for (unsigned k : k_list) {
        QEulerTable table = order_k_table(ctx, k, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::vector<Rational> coeffs(n + 1);
            for (std::size_t l = 0; l <= n; ++l)
                coeffs[l] = Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(l))) *
                            table.numbers[n - l];
            Polynomial rhs(std::move(coeffs));
            if (table.polynomials[n] != rhs) {
                fail(r, "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                        " lhs=" + table.polynomials[n].str() + " rhs=" + rhs.str());
                return r;
            }
        }
    }
    return r;
}

CheckResult check_distribution(const QEulerContext& ctx, const std::vector<unsigned>& d_list,
                               std::size_t n_max) {
    CheckResult r{"distribution"};
    const std::vector<Rational> points = {Rational(0), Rational(1, 2), Rational(1)};
    for (unsigned d : d_list) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            for (const Rational& x0 : points) {
                if (distribution_check(ctx, n, d, x0))
                    continue;
                QEulerTable base = qeuler_polynomials(ctx, n);
                QEulerTable powered =
                    qeuler_polynomials(QEulerContext(ctx.weight().power(d), ctx.precision()), n);
                Rational lhs =
                    base.polynomials[n].evaluate(Rational(static_cast<long long>(d)) * x0);
                Rational acc;
                Rational w(1);
                for (unsigned j = 0; j < d; ++j) {
                    acc += w * powered.polynomials[n].evaluate(x0 + Rational(j, d));
                    w *= -ctx.weight().qzeta();
                }
                Rational rhs = pow(Rational(static_cast<long long>(d)), static_cast<long long>(n)) /
                               q_bracket_neg(d, ctx.weight().q()) * acc;
                fail(r, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " x0=" + x0.str() +
                        " lhs=" + lhs.str() + " rhs=" + rhs.str());
                return r;
            }
        }
    }
    return r;
}

CheckResult check_sheffer_identity(const QEulerContext& ctx, std::size_t n_max) {
    CheckResult r{"sheffer-identity"};
    QEulerTable table = qeuler_polynomials(ctx, n_max);
    ShefferPair pair(ctx.g(), TruncatedSeries::identity(ctx.precision()));
    const std::vector<std::pair<Rational, Rational>> points = {
        {Rational(1), Rational(1)}, {Rational(1, 2), Rational(-1, 3)}, {Rational(2), Rational(1, 3)}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (const auto& [x0, y0] : points) {
            if (!sheffer_identity_check(pair, table.polynomials, n, x0, y0)) {
                fail(r, "n=" + std::to_string(n) + " x0=" + x0.str() + " y0=" + y0.str());
                return r;
            }
        }
        for (const Rational& y : {Rational(1), Rational(-1, 2), Rational(1, 3)}) {
            Polynomial lhs = addition_formula(ctx, n, y);
            Polynomial rhs = table.polynomials[n].shift(y);
            if (lhs != rhs) {
                fail(r, "addition n=" + std::to_string(n) + " y=" + y.str() +
                        " lhs=" + lhs.str() + " rhs=" + rhs.str());
                return r;
            }
        }
    }
    return r;
}

CheckResult check_scaling(const QEulerContext& ctx, const std::vector<Rational>& alpha_list,
                          std::size_t n_max) {
    CheckResult r{"scaling"};
    QEulerTable table = qeuler_polynomials(ctx, n_max);
    for (const Rational& alpha : alpha_list) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            if (scaling_check(ctx, n, alpha))
                continue;
            std::vector<Rational> scaled(ctx.precision() + 1);
            Rational factor(1);
            for (std::size_t i = 0; i <= ctx.precision(); ++i) {
                scaled[i] = ctx.g().coeff(i) * factor;
                factor /= alpha;
            }
            TruncatedSeries transfer = ctx.g() * TruncatedSeries(std::move(scaled)).invert();
            Polynomial rhs = pow(alpha, static_cast<long long>(n)) *
                             apply_operator(transfer, table.polynomials[n]);
            fail(r, "alpha=" + alpha.str() + " n=" + std::to_string(n) +
                    " lhs=" + table.polynomials[n].scale_argument(alpha).str() +
                    " rhs=" + rhs.str());
            return r;
        }
    }
    return r;
}

CheckResult check_multinomial(const QEulerContext& ctx, std::size_t n_max) {
    CheckResult r{"multinomial"};
    TruncatedSeries functional = ctx.g().invert();
    for (std::size_t m = 1; m <= 3; ++m) {
        std::vector<TruncatedSeries> fs(m, functional);
        for (std::size_t n = 0; n <= n_max; ++n) {
            Rational lhs = multinomial_action(fs, n);
            Rational rhs = apply_functional(functional.pow(static_cast<unsigned>(m)),
                                            Polynomial::monomial(n));
            if (lhs != rhs) {
                fail(r, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                        " lhs=" + lhs.str() + " rhs=" + rhs.str());
                return r;
            }
        }
    }
    return r;
}

CheckResult check_biorthogonality(const QEulerContext& ctx, std::size_t n_max) {
    CheckResult r{"biorthogonality"};
    QEulerTable table = qeuler_polynomials(ctx, n_max);
    ShefferPair pair(ctx.g(), TruncatedSeries::identity(ctx.precision()));
    auto matrix = biorthogonality(pair, table.polynomials, n_max, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t k = 0; k <= n_max; ++k) {
            Rational expected = n == k ? Rational(factorial(static_cast<unsigned>(n))) : Rational();
            if (matrix[n][k] != expected) {
                fail(r, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                        " lhs=" + matrix[n][k].str() + " rhs=" + expected.str());
                return r;
            }
        }
    }
    return r;
}

int run_verify(const RunConfig& config, const QWeight& weight, std::ostream& out) {
    QEulerContext ctx(weight, config.precision);
    std::size_t small_n = std::min<std::size_t>(config.n_max, 8);
    for (unsigned d : config.d_list)
        if (d == 0 || d % 2 == 0)
            throw ConfigError("distribution points --d must be odd");

    QEulerTable table = qeuler_polynomials(ctx, config.n_max);
    std::vector<CheckResult> checks;
    checks.push_back(check_recurrence(ctx, config.n_max));
    checks.push_back(check_functional_equation(ctx, config.n_max));
    checks.push_back(check_binomial(ctx, config.n_max));
    checks.push_back(check_order_k_binomial(ctx, config.k_list, small_n));
    checks.push_back(check_distribution(ctx, config.d_list, small_n));
    checks.push_back(check_sheffer_identity(ctx, small_n));
    checks.push_back(check_scaling(ctx, config.alpha_list, small_n));
    checks.push_back(check_multinomial(ctx, small_n));
    checks.push_back(check_biorthogonality(ctx, small_n));

    bool all_pass = std::all_of(checks.begin(), checks.end(),
                                [](const CheckResult& c) { return c.pass; });

    if (config.output == OutputFormat::json) {
        Json j = qeuler_table_json(weight, table);
        Json jc = Json::array();
        for (const CheckResult& c : checks) {
            Json row{{"check", c.name}, {"status", c.pass ? "pass" : "fail"}};
            if (!c.pass)
                row["detail"] = c.detail;
            jc.push_back(std::move(row));
        }
        j["checks"] = std::move(jc);
        j["all_pass"] = all_pass;
        out << j.dump(2) << "\n";
    } else if (config.output == OutputFormat::csv) {
        out << "check,status\n";
        for (const CheckResult& c : checks)
            out << c.name << "," << (c.pass ? "pass" : "fail") << "\n";
    } else {
        out << "weight: q=" << weight.q().str() << " zeta=" << weight.zeta().str() << "\n";
        for (std::size_t n = 0; n < table.numbers.size(); ++n)
            out << "E_" << n << " = " << table.numbers[n].str() << "\n";
        for (const CheckResult& c : checks) {
            out << "check " << c.name << ": " << (c.pass ? "pass" : "fail") << "\n";
            if (!c.pass)
                out << "  " << c.detail << "\n";
        }
        out << "result: " << (all_pass ? "pass" : "fail") << "\n";
    }
    return all_pass ? exit_code::ok : exit_code::check_failed;
}

int run_table(const RunConfig& config, const QWeight& weight, std::ostream& out) {
    QEulerContext ctx(weight, config.precision);
    QEulerTable table = qeuler_polynomials(ctx, config.n_max);
    if (config.output == OutputFormat::json) {
        out << qeuler_table_json(weight, table).dump(2) << "\n";
    } else if (config.output == OutputFormat::csv) {
        if (config.command == Command::numbers) {
            out << "n,value\n";
            for (std::size_t n = 0; n < table.numbers.size(); ++n)
                out << n << "," << table.numbers[n].str() << "\n";
        } else {
            out << "n,k,coefficient\n";
            for (std::size_t n = 0; n < table.polynomials.size(); ++n)
                for (int k = 0; k <= table.polynomials[n].degree(); ++k)
                    out << n << "," << k << ","
                        << table.polynomials[n].coeff(static_cast<std::size_t>(k)).str() << "\n";
        }
    } else {
        out << "weight: q=" << weight.q().str() << " zeta=" << weight.zeta().str() << "\n";
        if (config.command == Command::numbers) {
            for (std::size_t n = 0; n < table.numbers.size(); ++n)
                out << "E_" << n << " = " << table.numbers[n].str() << "\n";
        } else {
            for (std::size_t n = 0; n < table.polynomials.size(); ++n)
                out << "E_" << n << "(x) = " << table.polynomials[n].str() << "\n";
        }
    }
    return exit_code::ok;
}

int run_order_k(const RunConfig& config, const QWeight& weight, std::ostream& out) {
    QEulerContext ctx(weight, config.precision);
    bool all_match = true;
    Json orders = Json::array();
    std::ostringstream pretty;
    std::ostringstream csv;
    csv << "k,n,number,convolution_match\n";
    for (unsigned k : config.k_list) {
        QEulerTable table = order_k_table(ctx, k, config.n_max);
        bool k_match = true;
        for (std::size_t n = 0; n <= config.n_max; ++n) {
            bool match = order_k_convolution(ctx, k, n) == table.numbers[n];
            k_match = k_match && match;
            csv << k << "," << n << "," << table.numbers[n].str() << ","
                << (match ? "pass" : "fail") << "\n";
        }
        all_match = all_match && k_match;
        Json entry = qeuler_table_json(weight, table);
        Json row{{"k", k}};
        row["numbers"] = entry["numbers"];
        row["polynomials"] = entry["polynomials"];
        row["convolution_match"] = k_match;
        orders.push_back(std::move(row));
        pretty << "order k=" << k << " (convolution " << (k_match ? "pass" : "fail") << ")\n";
        for (std::size_t n = 0; n < table.polynomials.size(); ++n)
            pretty << "E_" << n << "^(" << k << ")(x) = " << table.polynomials[n].str() << "\n";
    }
    if (config.output == OutputFormat::json) {
        Json j{{"weight", weight_json(weight)}, {"orders", std::move(orders)},
               {"all_pass", all_match}};
        out << j.dump(2) << "\n";
    } else if (config.output == OutputFormat::csv) {
        out << csv.str();
    } else {
        out << "weight: q=" << weight.q().str() << " zeta=" << weight.zeta().str() << "\n"
            << pretty.str() << "result: " << (all_match ? "pass" : "fail") << "\n";
    }
    return all_match ? exit_code::ok : exit_code::check_failed;
}

int run_zeta(const RunConfig& config, const QWeight& weight, std::ostream& out) {
    if (config.moment > config.precision)
        throw ConfigError("--moment must not exceed --precision");
    QEulerContext ctx(weight, config.precision);
    Rational x0 = config.x0_given ? config.x0 : Rational(1);
    std::vector<unsigned> cutoffs = config.levels;
    if (cutoffs.empty())
        for (unsigned m = 20; m <= 60; ++m)
            cutoffs.push_back(m);
    Rational target =
        qeuler_polynomials(ctx, config.moment).polynomials[config.moment].evaluate(x0);

    Json rows = Json::array();
    std::ostringstream csv;
    std::ostringstream pretty;
    csv << "M,partial,difference\n";
    for (unsigned m : cutoffs) {
        Rational partial =
            qzeta_partial(ctx, -static_cast<long long>(config.moment), x0, m);
        Rational diff = partial - target;
        rows.push_back(Json{{"M", m}, {"partial", partial.str()}, {"difference", diff.str()}});
        csv << m << "," << partial.str() << "," << diff.str() << "\n";
        pretty << "M=" << m << " partial=" << partial.str() << " difference=" << diff.str() << "\n";
    }
    if (config.output == OutputFormat::json) {
        Json j{{"weight", weight_json(weight)}, {"moment", config.moment},
               {"x0", x0.str()}, {"target", target.str()}, {"rows", std::move(rows)}};
        out << j.dump(2) << "\n";
    } else if (config.output == OutputFormat::csv) {
        out << csv.str();
    } else {
        out << "weight: q=" << weight.q().str() << " zeta=" << weight.zeta().str()
            << " moment=" << config.moment << " x0=" << x0.str()
            << " target=" << target.str() << "\n" << pretty.str();
    }
    return exit_code::ok;
}

int run_padic(const RunConfig& config, const QWeight& weight, std::ostream& out) {
    std::vector<unsigned> levels = config.levels;
    if (levels.empty())
        levels = {1, 2, 3, 4, 5, 6};
    PAdicExperiment exp(config.p, weight, levels, Polynomial::monomial(config.moment),
                        config.budget);
    Rational x0 = config.x0_given ? config.x0 : Rational(0);
    auto rows = convergence_report(exp, config.moment, x0);
    if (config.output == OutputFormat::json) {
        out << padic_report_json(exp, config.moment, rows).dump(2) << "\n";
    } else if (config.output == OutputFormat::csv) {
        out << padic_report_csv(rows);
    } else {
        out << "p=" << exp.p << " q=" << weight.q().str() << " zeta=" << weight.zeta().str()
            << " moment=" << config.moment << " x0=" << x0.str() << "\n";
        for (const auto& [level, v] : rows)
            out << "level " << level << ": valuation " << v.str() << "\n";
    }
    return exit_code::ok;
}

} // namespace

int run(const RunConfig& config, std::ostream& out) {
    if (config.n_max > config.precision)
        throw ConfigError("--n-max must not exceed --precision");
    QWeight weight(config.q, config.zeta);
    switch (config.command) {
    case Command::numbers:
    case Command::poly:
        return run_table(config, weight, out);
    case Command::order_k:
        if (config.k_list.empty())
            throw ConfigError("--k needs at least one order");
        return run_order_k(config, weight, out);
    case Command::verify:
        if (config.d_list.empty() || config.alpha_list.empty() || config.k_list.empty())
            throw ConfigError("verify needs non-empty --d, --alpha and --k lists");
        return run_verify(config, weight, out);
    case Command::zeta:
        return run_zeta(config, weight, out);
    case Command::padic:
        return run_padic(config, weight, out);
    }
    throw ConfigError("unknown command");
}

std::vector<unsigned> parse_level_list(const std::string& text) {
    auto parse_one = [](const std::string& s) -> unsigned {
        std::size_t pos = 0;
        unsigned long v = std::stoul(s, &pos);
        if (pos != s.size())
            throw ConfigError("malformed level '" + s + "'");
        return static_cast<unsigned>(v);
    };
    try {
        auto dots = text.find("..");
        if (dots != std::string::npos) {
            unsigned lo = parse_one(text.substr(0, dots));
            unsigned hi = parse_one(text.substr(dots + 2));
            if (hi < lo)
                throw ConfigError("empty level range '" + text + "'");
            std::vector<unsigned> out;
            for (unsigned m = lo; m <= hi; ++m)
                out.push_back(m);
            return out;
        }
        std::vector<unsigned> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            out.push_back(parse_one(item));
        if (out.empty())
            throw ConfigError("empty level list");
        return out;
    } catch (const std::logic_error&) {
        throw ConfigError("malformed level list '" + text + "'");
    }
}

namespace {

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(Rational::parse(item));
    if (out.empty())
        throw ConfigError("empty list");
    return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size())
            throw ConfigError("malformed integer list '" + text + "'");
        out.push_back(static_cast<unsigned>(v));
    }
    if (out.empty())
        throw ConfigError("empty list");
    return out;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact umbral-calculus toolkit for weighted q-Euler numbers and polynomials"};
    app.require_subcommand(1);

    std::string q_text = "1";
    std::string zeta_text = "1";
    std::string d_text = "1,3,5";
    std::string alpha_text = "2,-1,1/3";
    std::string k_text = "1,2,3";
    std::string levels_text;
    std::string x0_text;
    std::string output_text = "pretty";
    RunConfig config;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", q_text, "parameter q as a/b or integer");
        sub->add_option("--zeta", zeta_text, "parameter zeta as a/b or integer");
        sub->add_option("--n-max", config.n_max, "largest degree computed");
        sub->add_option("--precision", config.precision, "series precision");
        sub->add_option("--d", d_text, "odd moduli for the multiplication theorem");
        sub->add_option("--alpha", alpha_text, "scaling factors, comma-separated rationals");
        sub->add_option("--k", k_text, "orders for the order-k family");
        sub->add_option("--p", config.p, "odd prime for p-adic sums");
        sub->add_option("--moment", config.moment, "moment degree n");
        sub->add_option("--levels", levels_text, "levels: lo..hi or comma list");
        sub->add_option("--x0", x0_text, "evaluation point");
        sub->add_option("--output", output_text, "json, csv or pretty");
        sub->add_option("--budget", config.budget, "summand budget for p-adic sums")
            ->envname("QUMBRAL_BUDGET");
    };

    std::pair<const char*, Command> commands[] = {
        {"numbers", Command::numbers}, {"poly", Command::poly},
        {"order-k", Command::order_k}, {"verify", Command::verify},
        {"zeta", Command::zeta},       {"padic", Command::padic}};
    for (const auto& [name, cmd] : commands) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub);
        sub->callback([&config, cmd] { config.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config_error;
    }

    try {
        config.q = Rational::parse(q_text);
        config.zeta = Rational::parse(zeta_text);
        config.d_list = parse_unsigned_list(d_text);
        config.alpha_list = parse_rational_list(alpha_text);
        config.k_list = parse_unsigned_list(k_text);
        if (!levels_text.empty())
            config.levels = parse_level_list(levels_text);
        if (!x0_text.empty()) {
            config.x0 = Rational::parse(x0_text);
            config.x0_given = true;
        }
        if (output_text == "json")
            config.output = OutputFormat::json;
        else if (output_text == "csv")
            config.output = OutputFormat::csv;
        else if (output_text == "pretty")
            config.output = OutputFormat::pretty;
        else
            throw ConfigError("unknown output format '" + output_text + "'");
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config_error;
    }

    try {
        return run(config, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config_error;
    } catch (const InvalidWeight& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::invalid_weight;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::budget_exceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::failure;
    }
}

} // namespace qumbral
