#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qhull {

enum class ErrorKind {
  NotAGroup,
  NotAssociative,
  NotDistributive,
  NoUnity,
  NotLinear,
  NotUnital,
  RingMismatch,
  NotASubmodule,
  ShapeMismatch,
  NotTwoSided,
  CapExceeded,
  PreconditionFailed,
  NonUnique,
  NotFound,
  NonUniqueProduct,
  NoProduct,
  InternalInconsistency,
  UnknownCheck,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies the violated
/// contract; the message names the offending elements where there are any.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class CapExceeded : public AlgebraError {
 public:
  CapExceeded(std::string_view what, std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace qhull
