#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semirds {

enum class Errc {
  NotPrime,
  EvenCharacteristic,
  ReduciblePolynomial,
  InvalidArgument,
  NoSolution,
  OrderMismatch,
  NotCoprime,
  ZeroArgument,
  ScaleGuard,
  SpecMismatch,
  NotNormal,
  NotAbelianN,
  NotAbelian,
  ParameterMismatch,
  NotFound,
  NotSemiRegular,
  InvalidRds,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library; `code()` carries the error kind.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace semirds
