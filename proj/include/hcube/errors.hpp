#pragma once

#include <stdexcept>
#include <string>

namespace hcube {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition of an operation (dimension
/// mismatch, weight collision, duplicate rows, ...).
class PreconditionError : public Error {
 public:
  enum class Kind {
    kDimensionMismatch,
    kRowCountMismatch,
    kColCountMismatch,
    kWeightCollision,
    kIsomorphicColumns,
    kRowWeightCollision,
    kDuplicateRows,
    kHalfWeightColumn,
    kInvalidPermutation,
    kEmptyClass,
    kParse,
  };

  PreconditionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// The requested value does not exist or lies outside the supported domain:
/// n < 4 for rho, an (m, n) pair with no asymmetric matrix, a table miss.
class DomainError : public Error {
 public:
  enum class Kind { kOutOfRange, kNotTwoDistinguishable, kInfeasible, kNotInTable, kInsufficientColumns };

  DomainError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A configured node budget, bit budget, width guard or memory guard was hit.
/// Never converted into a guessed answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure, e.g. the cost recursion found zero or two
/// candidate values. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hcube
