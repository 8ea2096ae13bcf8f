#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "semirds/arith.hpp"
#include "semirds/bent.hpp"
#include "semirds/error.hpp"

using namespace semirds;

namespace {

PFunction from_poly(std::int64_t p, const std::vector<std::int64_t>& coeffs) {
  std::vector<std::int64_t> t(static_cast<std::size_t>(p));
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = 0;
    for (std::size_t j = coeffs.size(); j-- > 0;) v = mod(v * x + coeffs[j], p);
    t[static_cast<std::size_t>(x)] = v;
  }
  return PFunction::make(p, t);
}

PFunction random_function(std::mt19937_64& rng, std::int64_t p) {
  std::uniform_int_distribution<std::int64_t> d(0, p - 1);
  std::vector<std::int64_t> t(static_cast<std::size_t>(p));
  for (auto& v : t) v = d(rng);
  return PFunction::make(p, t);
}

std::complex<double> numeric_hat(const PFunction& f, std::int64_t b) {
  std::complex<double> acc = 0;
  for (std::int64_t x = 0; x < f.p; ++x) {
    acc += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(mod(f(x) + b * x, f.p)) / static_cast<double>(f.p));
  }
  return acc;
}

}  // namespace

TEST_CASE("fourier_hat examples") {
  const PFunction zero = PFunction::make(5, {0, 0, 0, 0, 0});
  CHECK(fourier_hat(zero, 0) == CycInt::constant(5, 5));
  const PFunction id = from_poly(3, {0, 1});
  CHECK(fourier_hat(id, -1) == CycInt::constant(3, 3));
  const PFunction sq = from_poly(3, {0, 0, 1});
  CHECK(fourier_hat(sq, 0) == delta(3));

  std::mt19937_64 rng(5);
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (int trial = 0; trial < 10; ++trial) {
      const PFunction f = random_function(rng, p);
      for (std::int64_t b = 0; b < p; ++b) {
        const CycInt h = fourier_hat(f, b);
        std::complex<double> val = 0;
        for (std::size_t i = 0; i < h.coeffs().size(); ++i)
          val += h.coeffs()[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(p));
        CHECK(std::abs(val - numeric_hat(f, b)) < 1e-9);
      }
    }
  }
}

TEST_CASE("is_bent examples") {
  CHECK(is_bent(from_poly(3, {0, 0, 1})));
  CHECK_FALSE(is_bent(from_poly(3, {0, 1})));
  CHECK_FALSE(is_bent(PFunction::make(7, std::vector<std::int64_t>(7, 0))));
  CHECK(is_bent(from_poly(7, {3, 1, 5})));
  CHECK_FALSE(is_bent(from_poly(7, {0, 0, 0, 1})));
}

TEST_CASE("poly_degree") {
  CHECK(poly_degree(from_poly(5, {0, 0, 1})) == 2);
  CHECK(poly_degree(PFunction::make(5, {3, 3, 3, 3, 3})) == 0);
  CHECK(poly_degree(PFunction::make(5, {0, 0, 0, 0, 0})) == 0);
  CHECK(poly_degree(from_poly(5, {0, 1, 0, 1})) == 3);
  // x^p = x as functions
  CHECK(poly_degree(from_poly(5, {0, 0, 0, 0, 0, 1})) == 1);

  std::mt19937_64 rng(11);
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    for (int trial = 0; trial < 20; ++trial) {
      const PFunction f = random_function(rng, p);
      CHECK(from_poly(p, interpolate(f)) == f);
    }
  }
}

TEST_CASE("Parseval and shift invariance") {
  std::mt19937_64 rng(3);
  for (std::int64_t p : {3, 5, 7}) {
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    for (int trial = 0; trial < 25; ++trial) {
      const PFunction f = random_function(rng, p);
      CycInt total(static_cast<int>(p));
      for (std::int64_t b = 0; b < p; ++b) {
        const CycInt h = fourier_hat(f, b);
        total += h * h.conj();
      }
      CHECK(total == CycInt::constant(static_cast<int>(p), p * p));

      const std::int64_t a = d(rng), c = d(rng);
      std::vector<std::int64_t> shifted(static_cast<std::size_t>(p));
      for (std::int64_t x = 0; x < p; ++x) shifted[static_cast<std::size_t>(x)] = f(x + a) + c;
      CHECK(is_bent(PFunction::make(p, shifted)) == is_bent(f));
    }
  }
}

TEST_CASE("verify_hou") {
  for (std::int64_t p : {3, 5}) {
    const HouResult r = verify_hou(p);
    CHECK(r.confirmed);
    CHECK_FALSE(r.counterexample.has_value());
    CHECK(r.checked == static_cast<std::uint64_t>(p == 3 ? 27 : 3125));
    CHECK(verify_hou(p, false, 3).confirmed);
  }
  // bent count: a x^2 + b x + c with a != 0
  int bent = 0;
  for (std::int64_t idx = 0; idx < 3125; ++idx) {
    std::vector<std::int64_t> t(5);
    std::int64_t rest = idx;
    for (auto& v : t) {
      v = rest % 5;
      rest /= 5;
    }
    if (is_bent(PFunction::make(5, t))) ++bent;
  }
  CHECK(bent == 100);
  try {
    verify_hou(7);
    FAIL("expected ScaleGuard");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ScaleGuard);
  }
  CHECK_THROWS_AS(verify_hou(11, true), Error);
  CHECK_THROWS_AS(PFunction::make(4, {0, 0, 0, 0}), Error);
  CHECK_THROWS_AS(PFunction::make(5, {0, 0}), Error);
}
