#include "semirds/bent.hpp"

#include <algorithm>
#include <thread>

#include "semirds/arith.hpp"
#include "semirds/error.hpp"

namespace semirds {

PFunction PFunction::make(std::int64_t p, std::vector<std::int64_t> table) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::EvenCharacteristic, "p must be odd");
  if (static_cast<std::int64_t>(table.size()) != p) throw Error(Errc::InvalidArgument, "table must have p entries");
  for (auto& v : table) v = mod(v, p);
  return PFunction{p, std::move(table)};
}

std::int64_t PFunction::operator()(std::int64_t x) const { return table[static_cast<std::size_t>(mod(x, p))]; }

CycInt fourier_hat(const PFunction& f, std::int64_t b) {
  const int p = static_cast<int>(f.p);
  std::vector<BigInt> counts(static_cast<std::size_t>(p), 0);
  for (std::int64_t x = 0; x < f.p; ++x) counts[static_cast<std::size_t>(mod(f(x) + b * x, f.p))] += 1;
  return CycInt::from_coeffs(p, counts);
}

bool is_bent(const PFunction& f) {
  for (std::int64_t b = 0; b < f.p; ++b) {
    const auto m = modulus_squared(fourier_hat(f, b));
    if (!m || *m != f.p) return false;
  }
  return true;
}

std::vector<std::int64_t> interpolate(const PFunction& f) {
  // f(x) = sum_a f(a) (1 - (x - a)^{p-1})
  const std::int64_t p = f.p;
  std::vector<std::int64_t> binom(static_cast<std::size_t>(p), 1);  // C(p-1, j)
  for (std::int64_t j = 1; j < p; ++j) {
    binom[static_cast<std::size_t>(j)] = binom[static_cast<std::size_t>(j - 1)] * (p - j) % p * inv_mod(j, p) % p;
  }
  std::vector<std::int64_t> c(static_cast<std::size_t>(p), 0);
  for (std::int64_t a = 0; a < p; ++a) {
    const std::int64_t fa = f(a);
    if (fa == 0) continue;
    c[0] = (c[0] + fa) % p;
    for (std::int64_t j = 0; j < p; ++j) {
      const std::int64_t term = binom[static_cast<std::size_t>(j)] * pow_mod(-a, static_cast<std::uint64_t>(p - 1 - j), p) % p;
      c[static_cast<std::size_t>(j)] = mod(c[static_cast<std::size_t>(j)] - fa * term, p);
    }
  }
  return c;
}

int poly_degree(const PFunction& f) {
  const auto c = interpolate(f);
  for (int j = static_cast<int>(c.size()) - 1; j > 0; --j) {
    if (c[static_cast<std::size_t>(j)] != 0) return j;
  }
  return 0;
}

namespace {

// idx in base p with f(0) most significant
PFunction function_at(std::int64_t p, std::uint64_t idx) {
  std::vector<std::int64_t> table(static_cast<std::size_t>(p));
  for (std::int64_t x = p - 1; x >= 0; --x) {
    table[static_cast<std::size_t>(x)] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(p));
    idx /= static_cast<std::uint64_t>(p);
  }
  return PFunction{p, std::move(table)};
}

}  // namespace

HouResult verify_hou(std::int64_t p, bool force, unsigned threads) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::EvenCharacteristic, "p must be odd");
  if (p > 7 || (p == 7 && !force)) throw Error(Errc::ScaleGuard, "p^p functions exceed the exhaustive limit");
  std::uint64_t total = 1;
  for (std::int64_t i = 0; i < p; ++i) total *= static_cast<std::uint64_t>(p);

  threads = std::max(1U, threads);
  std::vector<std::optional<std::uint64_t>> first_bad(threads);
  auto work = [&](unsigned w) {
    for (std::uint64_t idx = w; idx < total; idx += threads) {
      if (first_bad[w]) return;
      const PFunction f = function_at(p, idx);
      if (is_bent(f) != (poly_degree(f) == 2)) first_bad[w] = idx;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  HouResult out;
  out.checked = total;
  std::optional<std::uint64_t> bad;
  for (const auto& b : first_bad)
    if (b && (!bad || *b < *bad)) bad = b;
  if (bad) {
    out.confirmed = false;
    out.counterexample = function_at(p, *bad);
  }
  return out;
}

}  // namespace semirds
