#pragma once

#include <stdexcept>
#include <string>

namespace pinclass {

// Malformed input: bad grammar, automaton rejection, violated preconditions.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The request is well formed but the operation does not support it
// (e.g. recurrent complexity of a literal prefix).
class UnsupportedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Enumeration did not stabilise within the configured prefix budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pinclass
