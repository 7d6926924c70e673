#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stiefel {

using BigInt = boost::multiprecision::cpp_int;

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain (n <= k, a generator index out of range, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// A theorem's hypothesis does not hold for the requested ring or system.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// Malformed textual class or polynomial.
class ParseError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(BigInt state_space, BigInt budget)
        : Error("state space of " + state_space.str() + " assignments exceeds budget " +
                budget.str()),
          state_space_(std::move(state_space)),
          budget_(std::move(budget)) {}

    const BigInt& state_space() const noexcept { return state_space_; }
    const BigInt& budget() const noexcept { return budget_; }

private:
    BigInt state_space_;
    BigInt budget_;
};

}  // namespace stiefel
