#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loev {

// Malformed input: bad tables, unresolved labels, out-of-range parameters.
// The CLI maps this to exit status 1.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A point fell outside the represented domain (e.g. a grid point sitting on
// one of the removed closed sets).
class DomainError : public InputError {
public:
    explicit DomainError(const std::string& what) : InputError(what) {}
};

// A theorem hypothesis failed its exhaustive check; carries the check name
// and a witness. The CLI maps this to exit status 2.
class HypothesisError : public std::runtime_error {
public:
    HypothesisError(std::string check, std::string witness)
        : std::runtime_error(check + ": " + witness),
          check_(std::move(check)),
          witness_(std::move(witness)) {}

    const std::string& check() const noexcept { return check_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string check_;
    std::string witness_;
};

// An orbit ran past its budget: either the data admits a long orbit or the
// budget was too small. The CLI maps this to exit status 3.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::size_t steps, double length)
        : std::runtime_error("long orbit: hypotheses violated or budget too small"),
          steps_(steps),
          length_(length) {}

    std::size_t steps() const noexcept { return steps_; }
    double accumulated_length() const noexcept { return length_; }

private:
    std::size_t steps_;
    double length_;
};

} // namespace loev
