#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qumbral/padic_lab.hpp"
#include "qumbral/rational.hpp"

namespace qumbral {

enum class Command { numbers, poly, order_k, verify, zeta, padic };
enum class OutputFormat { json, csv, pretty };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int config_error = 2;
inline constexpr int invalid_weight = 3;
inline constexpr int budget_exceeded = 4;
inline constexpr int failure = 5;
} // namespace exit_code

struct RunConfig {
    Command command = Command::verify;
    Rational q = Rational(1);
    Rational zeta = Rational(1);
    std::size_t n_max = 10;
    std::size_t precision = 32;
    std::vector<unsigned> d_list = {1, 3, 5};
    std::vector<Rational> alpha_list = {Rational(2), Rational(-1), Rational(1, 3)};
    std::vector<unsigned> k_list = {1, 2, 3};
    std::uint64_t p = 3;
    std::size_t moment = 2;
    std::vector<unsigned> levels;         // empty = per-command default
    OutputFormat output = OutputFormat::pretty;
    std::uint64_t budget = PAdicExperiment::kDefaultBudget;
    Rational x0;                          // meaningful when x0_given
    bool x0_given = false;
};

/// Executes one command against the given stream. Returns exit_code::ok
/// or exit_code::check_failed; domain errors propagate as exceptions.
int run(const RunConfig& config, std::ostream& out);

/// Parses argv, runs, and maps errors to distinct exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "1..6" (inclusive range), "1,3,5" (list) or a single integer.
std::vector<unsigned> parse_level_list(const std::string& text);

} // namespace qumbral
