#pragma once

#include <stdexcept>
#include <string>

namespace qumbral {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct NotPrime : std::domain_error {
    explicit NotPrime(const std::string& what) : std::domain_error(what) {}
};

struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

struct CompositionDomain : std::domain_error {
    explicit CompositionDomain(const std::string& what) : std::domain_error(what) {}
};

struct NotDelta : std::domain_error {
    explicit NotDelta(const std::string& what) : std::domain_error(what) {}
};

struct InsufficientPrecision : std::domain_error {
    explicit InsufficientPrecision(const std::string& what) : std::domain_error(what) {}
};

struct InvalidWeight : std::domain_error {
    explicit InvalidWeight(const std::string& what) : std::domain_error(what) {}
};

struct PoleAtNonpositive : std::domain_error {
    explicit PoleAtNonpositive(const std::string& what) : std::domain_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qumbral
