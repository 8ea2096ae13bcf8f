#pragma once

// Mutually unbiased bases of C^m from an abelian semi-regular RDS.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semirds/cyclo.hpp"
#include "semirds/rds.hpp"

namespace semirds {

struct MubBasis {
  std::string label;
  bool standard = false;  // unit vectors, no 1/sqrt(m) scaling
  std::vector<std::vector<CycInt>> vectors;
};

struct MubFamily {
  std::int64_t m = 0;
  int L = 1;
  std::vector<MubBasis> bases;  // character bases scaled by 1/sqrt(m) when normalized
};

/// One basis per character of N, made of the m characters of G restricting
/// to it evaluated on R (R sorted by coset), plus the standard basis.
/// Throws NotAbelian, NotSemiRegular, InvalidRds.
MubFamily mub_from_abelian_rds(const RdsInstance& inst);

struct MubWitness {
  std::size_t basis_a = 0, vector_a = 0;
  std::size_t basis_b = 0, vector_b = 0;
  std::string reason;
};

struct MubVerdict {
  bool valid = true;
  std::int64_t a_squared_denominator = 0;  // a^2 = 1/m when valid
  std::optional<MubWitness> witness;
};

/// sum_i u_i conj(v_i)
CycInt inner_product(const std::vector<CycInt>& u, const std::vector<CycInt>& v);

/// Exact check on the unnormalized vectors: within a basis <u,u> = w and
/// <u,v> = 0; across bases |<u,v>|^2 m = w_a w_b, with w = m for character
/// bases and 1 for the standard one.
MubVerdict verify_mub_exact(const MubFamily& fam, unsigned threads = 1);

/// Normalized complex entries, [basis][vector][coordinate].
std::vector<std::vector<std::vector<std::complex<double>>>> mub_to_float(const MubFamily& fam);

/// min over primes p | d of (p^{nu_p(d)} + 1). Throws InvalidArgument for d < 2.
std::int64_t macneish_bound(std::int64_t d);

/// n > min over primes p | m of p^{nu_p(m)}.
bool wocjan_gate(std::int64_t m, std::int64_t n);

}  // namespace semirds
