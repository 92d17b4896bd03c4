#pragma once

#include <stdexcept>
#include <string>

namespace gswf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad distribution, out-of-range index, wrong arity.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The request exceeds a configured size limit (N_MAX, ORACLE_MAX, search budget).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A check was asked to run outside the hypothesis of the statement it verifies.
class HypothesisError : public Error {
public:
    using Error::Error;
};

}  // namespace gswf
