#pragma once

// Command-line front end. Exit codes: 0 claim confirmed, 1 claim refuted or
// invalid input, 2 usage or scale error.

#include <ostream>

namespace semirds {

inline constexpr int kExitConfirmed = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semirds
