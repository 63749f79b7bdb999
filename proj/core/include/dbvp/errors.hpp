#pragma once

#include <stdexcept>
#include <string>

namespace dbvp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: wrong sizes, wrong boundary-condition kind, bad ranges.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& what) : Error(what) {}
};

/// A stated precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Adaptive quadrature ran out of subdivision budget; carries the best estimate.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double best_estimate)
        : Error(what), best_estimate_(best_estimate) {}
    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

/// The objective became non-finite during a solve.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& what) : Error(what) {}
};

/// Requested operation does not support the given problem size.
class UnsupportedSizeError : public Error {
public:
    explicit UnsupportedSizeError(const std::string& what) : Error(what) {}
};

/// Problem file does not match the schema; message names the offending field.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error(what) {}
};

} // namespace dbvp
