#pragma once

#include <stdexcept>
#include <string>

namespace witnesskit {

/// Shapes or dimensions do not fit together (d1*d2 != rows, vector lengths, ...).
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input values violate a domain invariant (non-finite, non-Hermitian, bad trace, a <= 0, ...).
class ValueError : public std::invalid_argument {
 public:
  explicit ValueError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical precondition of an operation is not met, e.g. a witness
/// that does not satisfy the positivity certificate asked for its mirror bound.
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed input document (JSON syntax or schema).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace witnesskit
