#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkz {

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  RankDeficient,
  BetaOutsideSpan,
  NotNormalized,
  RepeatedColumns,
  FaceNotInLattice,
  NotAPyramid,
  EmptyFace,
  DegenerateConfiguration,
  UnsupportedFormat,
  ScaleLimit,
  InternalInconsistency,
  ShiftInvarianceViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gkz
