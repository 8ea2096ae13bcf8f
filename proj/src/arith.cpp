#include "semirds/arith.hpp"

#include <numeric>

#include "semirds/error.hpp"

namespace semirds {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  // callers keep m below 2^31, so products fit in 64 bits
  std::int64_t result = 1 % m;
  std::int64_t b = mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = result * b % m;
    b = b * b % m;
    exp >>= 1U;
  }
  return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    std::int64_t t = g / a1;
    std::int64_t tmp = g - t * a1;
    g = a1;
    a1 = tmp;
    tmp = x - t * x1;
    x = x1;
    x1 = tmp;
  }
  if (g != 1) throw Error(Errc::NotCoprime, "no inverse modulo " + std::to_string(m));
  return mod(x, m);
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

int euler_phi(int n) {
  int result = n;
  for (auto [prime, e] : factorize(n)) {
    (void)e;
    result = result / static_cast<int>(prime) * static_cast<int>(prime - 1);
  }
  return result;
}

}  // namespace semirds
