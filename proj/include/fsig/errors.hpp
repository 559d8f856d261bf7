#ifndef FSIG_ERRORS_HPP
#define FSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsig {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (bad sort order, negative
// size, non-quasi-homogeneous polynomial handed to the graded oracle, ...).
struct DomainError : Error {
    using Error::Error;
};

// A closed formula was requested outside the inequalities that make it valid.
// The message names the violated inequality; out-of-hypothesis instances must
// go through the brute-force oracle instead.
struct HypothesisViolation : Error {
    using Error::Error;
};

// Two operands living over different coefficient fields were combined.
struct FieldMismatch : Error {
    using Error::Error;
};

// leading_term() of the zero polynomial.
struct ZeroPolynomialError : Error {
    using Error::Error;
};

// Division by zero in a coefficient field; inside the closed-basis recursions
// this indicates a violated characteristic hypothesis, i.e. a contract bug.
struct DivisionByZero : Error {
    using Error::Error;
};

}  // namespace fsig

#endif
