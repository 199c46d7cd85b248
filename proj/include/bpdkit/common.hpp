#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace bpdkit {

/// Grid location in matrix coordinates, 1-based: rows grow downward,
/// columns grow to the right.
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

enum class ErrorCode {
  InvalidPermutation,
  InvalidArgument,
  NotVexillary,
  InvalidTableau,
  NotInnerCorner,
  NoPreimage,
  InvalidBiword,
  InvalidPipeDream,
  InvalidBpd,
  DroopUnavailable,
  UndefinedInsertion,
  NoBlankTiles,
  GuardFailure,
  PipesDoNotCross,
  IterationCap,
  NoLegalTarget,
  NotFound,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable reason code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bpdkit
