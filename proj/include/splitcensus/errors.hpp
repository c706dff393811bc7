#ifndef SPLITCENSUS_ERRORS_HPP
#define SPLITCENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace splitcensus {

// Base for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error {
    using Error::Error;
};
struct TooLargeError : Error {
    using Error::Error;
};
struct ZeroInverseError : Error {
    using Error::Error;
};
struct ContextMismatchError : Error {
    using Error::Error;
};
struct DivisionByZeroPolyError : Error {
    using Error::Error;
};
struct BothZeroError : Error {
    using Error::Error;
};
struct DegreeTooHighError : Error {
    using Error::Error;
};
struct ConstantModulusError : Error {
    using Error::Error;
};
struct BudgetExceededError : Error {
    using Error::Error;
};
struct IsolatedVertexError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

// A mathematically guaranteed property failed to hold. Reaching this is a
// bug in the library (or a counterexample); the CLI maps it to exit code 2.
struct InvariantViolationError : Error {
    using Error::Error;
};

}  // namespace splitcensus

#endif
