#include "semirds/error.hpp"

namespace semirds {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NoSolution: return "NoSolution";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::ScaleGuard: return "ScaleGuard";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAbelianN: return "NotAbelianN";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::ParameterMismatch: return "ParameterMismatch";
    case Errc::NotFound: return "NotFound";
    case Errc::NotSemiRegular: return "NotSemiRegular";
    case Errc::InvalidRds: return "InvalidRds";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace semirds
