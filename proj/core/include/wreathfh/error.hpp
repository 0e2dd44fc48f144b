#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wfh {

enum class Errc {
  // group-core
  NotAssociative,
  NoIdentity,
  NotInvertible,
  BadTable,
  // ade-catalog
  BadOrder,
  ClosureOverflow,
  RelationFailure,
  // partitions
  UnknownClass,
  NotContained,
  DegreeMismatch,
  TooShort,
  RangeTooLarge,
  // wreath
  GroupMismatch,
  TooSmall,
  BadElement,
  // class-algebra
  NotRealizable,
  BudgetExceeded,
  // fh-ring
  BadCycle,
  NonIntegralResult,
  ExponentResidue,
  Precondition,
  // interp
  NotIntegerValued,
  InsufficientPoints,
  Mismatch,
  // front end
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Library-wide exception. `code()` identifies the failure; `what()` carries
/// the witness (offending triple, element, class, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wfh
