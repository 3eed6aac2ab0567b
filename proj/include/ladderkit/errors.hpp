#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ladderkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Sum of scalars living in different radical/pi strata.
struct IncompatibleScalar : Error {
    using Error::Error;
};

// Operator expression outside the class an operation supports
// (e.g. fractional power of a non-monomial, inverse of a sum).
struct AlgebraError : Error {
    using Error::Error;
};

// Lowering operator does not have the superpotential shape, or the
// candidate gauge function fails the similarity identity.
struct NoGauge : Error {
    using Error::Error;
};

// A nested-commutator construction left residual exp/negative powers
// where a bare polynomial was required.
struct NonPolynomialResidue : Error {
    using Error::Error;
};

struct QuadratureError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// Positioned DSL failure. `offset` is a byte offset into the input.
struct ParseError : Error {
    std::size_t offset;
    std::string expected;
    std::string found;
    ParseError(std::size_t off, std::string exp, std::string fnd)
        : Error("parse error at offset " + std::to_string(off) + ": expected " + exp +
                ", found " + fnd),
          offset(off),
          expected(std::move(exp)),
          found(std::move(fnd)) {}
};

}  // namespace ladderkit
