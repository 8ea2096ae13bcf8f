#pragma once

// p-ary bent functions Z_p -> Z_p and the degree-2 characterization.

#include <cstdint>
#include <optional>
#include <vector>

#include "semirds/cyclo.hpp"

namespace semirds {

struct PFunction {
  std::int64_t p = 3;
  std::vector<std::int64_t> table;  // f(0), ..., f(p - 1), reduced mod p

  /// Validates p (odd prime) and the table length; reduces the values.
  static PFunction make(std::int64_t p, std::vector<std::int64_t> table);
  std::int64_t operator()(std::int64_t x) const;
  friend bool operator==(const PFunction&, const PFunction&) = default;
};

/// f^(b) = sum_x xi_p^{f(x) + b x}.
CycInt fourier_hat(const PFunction& f, std::int64_t b);

/// |f^(b)|^2 = p for every b.
bool is_bent(const PFunction& f);

/// Coefficients of the interpolating polynomial of degree < p, constant term first.
std::vector<std::int64_t> interpolate(const PFunction& f);

/// Degree of the interpolating polynomial; 0 for constants including zero.
int poly_degree(const PFunction& f);

struct HouResult {
  bool confirmed = true;
  std::uint64_t checked = 0;
  std::optional<PFunction> counterexample;  // first in table order
};

/// Exhausts all p^p functions checking is_bent(f) <=> poly_degree(f) = 2.
/// p in {3, 5}; p = 7 needs force. Throws ScaleGuard otherwise.
HouResult verify_hou(std::int64_t p, bool force = false, unsigned threads = 1);

}  // namespace semirds
