#pragma once

#include <stdexcept>
#include <string>

namespace nilbohr {

// Exceptions are reserved for contract violations and tool failures.
// Mathematically meaningful negative outcomes (Stuck, NotFound, refuted)
// are ordinary return values.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration bound was exceeded (e.g. too many sumset elements).
struct BoundExceeded : Error {
    using Error::Error;
};

// An exhaustive check would exceed its enumeration budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// A density query was made against an empty interval family.
struct EmptyFamily : Error {
    using Error::Error;
};

// A documented precondition does not hold for the given arguments.
struct PreconditionViolated : Error {
    using Error::Error;
};

// An internal consistency check failed; indicates a bug, never expected.
struct VerificationFailed : Error {
    using Error::Error;
};

// Malformed input text; carries the 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& message)
        : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

}  // namespace nilbohr
