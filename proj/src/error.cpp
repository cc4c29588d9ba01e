#include "bistellar/error.hpp"

namespace bistellar {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::BadFacetArity: return "BadFacetArity";
    case ErrorKind::DuplicateFacet: return "DuplicateFacet";
    case ErrorKind::NonPseudomanifold: return "NonPseudomanifold";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::VertexNotPresent: return "VertexNotPresent";
    case ErrorKind::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorKind::TriangleNotPresent: return "TriangleNotPresent";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::NotInvertiblePair: return "NotInvertiblePair";
    case ErrorKind::PreparationStalled: return "PreparationStalled";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace bistellar
