#include "qhull/error.hpp"

namespace qhull {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NoUnity: return "NoUnity";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotASubmodule: return "NotASubmodule";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotTwoSided: return "NotTwoSided";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NonUnique: return "NonUnique";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NonUniqueProduct: return "NonUniqueProduct";
    case ErrorKind::NoProduct: return "NoProduct";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

AlgebraError::AlgebraError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

CapExceeded::CapExceeded(std::string_view what, std::uint64_t limit)
    : AlgebraError(ErrorKind::CapExceeded,
                   std::string(what) + " exceeds limit " + std::to_string(limit)),
      limit_(limit) {}

void fail(ErrorKind kind, const std::string& detail) {
  if (kind == ErrorKind::CapExceeded) throw CapExceeded(detail, 0);
  throw AlgebraError(kind, detail);
}

}  // namespace qhull
