#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewbrace {

using Elem = std::uint32_t;

enum class ErrorCode {
  MalformedTable,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotASubgroup,
  NotNormal,
  BadIndices,
  BraceRelationFails,
  IdentityMismatch,
  NotRadical,
  NotARing,
  NotALeftIdeal,
  NotAnIdeal,
  QuotientTooLarge,
  TooLargeForIdealEnumeration,
  BadParameters,
  ConditionViolated,
  NotInvertible,
  NonCommutingFamily,
  NotAHomomorphism,
  BadPrime,
  TooLarge,
  ParseError,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library. The witness carries the offending
// elements (e.g. the triple on which associativity fails) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<Elem> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Elem> witness_;
};

// Process exit code for the CLI contract: 1 parse, 2 validation, 3 resource.
int exit_code_for(ErrorCode code);

}  // namespace skewbrace
