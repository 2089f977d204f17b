#pragma once

#include <stdexcept>
#include <string>

namespace baire {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two objects were built over incompatible alphabets.
struct AlphabetMismatchError : Error {
    using Error::Error;
};

/// A partial map required to be Lipschitz is not.
struct NotLipschitzError : Error {
    using Error::Error;
};

/// A table-backed homomorphism was evaluated outside its stored table.
struct OutOfTableError : Error {
    using Error::Error;
};

/// A closure lift was requested at a word no domain point witnesses.
struct NotInClosureError : Error {
    using Error::Error;
};

/// A finite-sample oracle ran out of points matching a query.
struct OracleExhaustedError : Error {
    using Error::Error;
};

/// Every letter of a finite alphabet is forbidden at the split position.
/// Signals that the input map was not a valid partial isometry (or that the
/// oracle cannot realize the required freshness).
struct NoFreshLetterError : Error {
    using Error::Error;
};

/// A partial map failed validation as a finite partial Lipschitz injection.
struct NotConditionError : Error {
    using Error::Error;
};

/// Malformed or mis-shaped JSON input.
struct JsonFormatError : Error {
    using Error::Error;
};

}  // namespace baire
