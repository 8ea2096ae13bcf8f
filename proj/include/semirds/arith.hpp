#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace semirds {

bool is_prime(std::int64_t n);

/// Returns (p, n) with q = p^n, or nullopt if q is not a prime power.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m);
std::int64_t inv_mod(std::int64_t a, std::int64_t m);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
int euler_phi(int n);

}  // namespace semirds
