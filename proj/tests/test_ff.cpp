#include <doctest.h>

#include <algorithm>
#include <set>

#include "semirds/error.hpp"
#include "semirds/ff.hpp"

using namespace semirds;

namespace {

// Squares of F_p found by direct enumeration, independent of exponentiation.
std::set<std::int64_t> squares_mod(std::int64_t p) {
  std::set<std::int64_t> s;
  for (std::int64_t y = 1; y < p; ++y) s.insert(y * y % p);
  return s;
}

}  // namespace

TEST_CASE("ff_create builds prime and extension fields") {
  auto f13 = FieldCtx::create(13, 1);
  CHECK(f13.order() == 13);
  CHECK(f13.modulus() == std::vector<std::uint32_t>{0, 1});

  auto f25 = FieldCtx::create(5, 2, std::vector<std::int64_t>{1, 1, 1});
  CHECK(f25.order() == 25);

  // x^2 + x + 1 has no root mod 5, checked by evaluating all residues.
  for (std::int64_t x = 0; x < 5; ++x) CHECK((x * x + x + 1) % 5 != 0);
}

TEST_CASE("ff_create errors") {
  CHECK_THROWS_AS(FieldCtx::create(9, 1), Error);
  try {
    FieldCtx::create(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
  }
  try {
    FieldCtx::create(2, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EvenCharacteristic);
  }
  try {
    FieldCtx::create(5, 2, std::vector<std::int64_t>{1, 0, 1});  // x^2 + 1 = (x-2)(x-3)
    FAIL("expected ReduciblePolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ReduciblePolynomial);
  }
}

TEST_CASE("default modulus is the lexicographically smallest irreducible and deterministic") {
  auto a = FieldCtx::create(5, 2);
  auto b = FieldCtx::create(5, 2);
  CHECK(a.modulus() == b.modulus());
  CHECK(a.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(FieldCtx::create(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  // degree 3: irreducible iff no root; smallest candidate in low-first order
  auto f27 = FieldCtx::create(3, 3);
  const auto& m = f27.modulus();
  for (std::int64_t x = 0; x < 3; ++x) {
    CHECK((m[0] + m[1] * x + m[2] * x * x + x * x * x) % 3 != 0);
  }
}

TEST_CASE("trace") {
  auto f13 = FieldCtx::create(13, 1);
  CHECK(trace(f13, f13.zero()) == 0);
  CHECK(trace(f13, f13.from_int(7)) == 7);

  auto f25 = FieldCtx::create(5, 2, std::vector<std::int64_t>{1, 1, 1});
  const FieldElem root = f25.basis(1);
  // root + root^5 computed by repeated multiplication
  FieldElem r5 = root;
  for (int i = 0; i < 4; ++i) r5 = f25.mul(r5, root);
  FieldElem sum = f25.add(root, r5);
  CHECK(sum.coeffs[1] == 0);
  CHECK(trace(f25, root) == sum.coeffs[0]);
  // root^2 = -root - 1, so the two roots sum to -1
  CHECK(trace(f25, root) == 4);

  // additivity, exhaustive on F_25
  const auto elems = f25.elements();
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      CHECK((trace(f25, x) + trace(f25, y)) % 5 == trace(f25, f25.add(x, y)));
    }
  }
}

TEST_CASE("quadratic character") {
  auto f13 = FieldCtx::create(13, 1);
  CHECK(quad_char(f13, f13.zero()) == 0);
  CHECK(quad_char(f13, f13.one()) == 1);
  CHECK(quad_char(f13, f13.from_int(2)) == -1);
  const auto sq = squares_mod(13);
  for (std::int64_t x = 1; x < 13; ++x) {
    CHECK(quad_char(f13, f13.from_int(x)) == (sq.count(x) ? 1 : -1));
  }

  for (auto [p, n] : {std::pair{5, 1}, {3, 2}, {13, 1}, {17, 1}, {5, 2}, {3, 3}}) {
    auto k = FieldCtx::create(p, n);
    const auto table = quad_char_table(k);
    const auto elems = k.elements();
    int plus = 0;
    for (const auto& x : elems) {
      const int eta = quad_char(k, x);
      CHECK(eta == table[k.rank(x)]);
      if (eta == 1) ++plus;
    }
    CHECK(static_cast<std::uint64_t>(plus) == (k.order() - 1) / 2);
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        if (k.is_zero(x) || k.is_zero(y)) continue;
        CHECK(quad_char(k, k.mul(x, y)) == quad_char(k, x) * quad_char(k, y));
      }
    }
  }
}

TEST_CASE("fourth roots") {
  auto f13 = FieldCtx::create(13, 1);
  // scan oracle
  std::vector<std::uint32_t> e_scan, f_scan;
  for (std::uint32_t x = 1; x < 13; ++x) {
    if (x * x % 13 == 12) f_scan.push_back(x);
    if (x * x * x * x % 13 == 1) e_scan.push_back(x);
  }
  CHECK(e_scan == std::vector<std::uint32_t>{1, 5, 8, 12});
  CHECK(f_scan == std::vector<std::uint32_t>{5, 8});

  const auto roots = fourth_roots(f13);
  REQUIRE(roots.e_list.size() == 4);
  REQUIRE(roots.f_list.size() == 2);
  for (std::size_t i = 0; i < 4; ++i) CHECK(roots.e_list[i].coeffs[0] == e_scan[i]);
  for (std::size_t i = 0; i < 2; ++i) CHECK(roots.f_list[i].coeffs[0] == f_scan[i]);

  auto f25 = FieldCtx::create(5, 2);
  const auto r25 = fourth_roots(f25);
  CHECK(r25.e_list.size() == 4);
  CHECK(r25.f_list.size() == 2);
  for (const auto& f : r25.f_list) {
    CHECK(f25.mul(f, f) == f25.neg(f25.one()));
    CHECK(std::find(r25.e_list.begin(), r25.e_list.end(), f) != r25.e_list.end());
  }
  for (const auto& e : r25.e_list) CHECK(f25.pow(e, 4) == f25.one());

  try {
    fourth_roots(FieldCtx::create(7, 1));
    FAIL("expected NoSolution");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoSolution);
  }
}

TEST_CASE("eta cubic sum matches direct summation and the Weil bound") {
  for (std::int64_t p : {5, 13}) {
    const auto sq = squares_mod(p);
    std::int64_t direct = 0;
    for (std::int64_t x = 1; x < p; ++x) {
      const std::int64_t v = (2 * x + x * x * x) % p;
      direct += v == 0 ? 0 : (sq.count(v) ? 1 : -1);
    }
    CHECK(eta_cubic_sum(FieldCtx::create(p, 1)) == direct);
  }
  for (auto [p, n] : {std::pair{5, 1}, {3, 2}, {13, 1}, {17, 1}, {5, 2}, {29, 1}}) {
    auto k = FieldCtx::create(p, n);
    const auto v = eta_cubic_sum(k);
    CHECK(v * v <= 4 * static_cast<std::int64_t>(k.order()));
  }
}

TEST_CASE("field inverse and division by 2 and 4") {
  auto k = FieldCtx::create(3, 2);
  for (const auto& x : k.elements()) {
    if (k.is_zero(x)) {
      CHECK_THROWS_AS(k.inv(x), Error);
      continue;
    }
    CHECK(k.mul(x, k.inv(x)) == k.one());
    CHECK(k.add(k.half(x), k.half(x)) == x);
    CHECK(k.mul(k.from_int(4), k.quarter(x)) == x);
  }
}
