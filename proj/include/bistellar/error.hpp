#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bistellar {

enum class ErrorKind {
  EmptyInput,
  BadFacetArity,
  DuplicateFacet,
  NonPseudomanifold,
  EulerViolation,
  LabelOutOfRange,
  VertexNotPresent,
  EdgeNotPresent,
  TriangleNotPresent,
  IllegalMove,
  NotInvertiblePair,
  PreparationStalled,
  ParseError,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Domain error raised by every module. what() carries "<Name>: detail".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace bistellar
