#pragma once

// Exact arithmetic in Z[xi_L]. Elements are kept at full length L in
// Z[x]/(x^L - 1); reduction modulo Phi_L happens only when comparing or
// testing rationality.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "semirds/ff.hpp"

namespace semirds {

using BigInt = mpz_class;

struct CycPoly {
  int order = 1;
  std::vector<BigInt> coeffs;  // low degree first, monic, degree phi(L)

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Phi_L by exact division of x^L - 1 by Phi_d for the proper divisors d.
/// Results are memoized; safe to call concurrently.
const CycPoly& cyclotomic_polynomial(int order);

class CycInt {
 public:
  CycInt() : CycInt(1) {}
  explicit CycInt(int order);

  static CycInt constant(int order, const BigInt& c);
  /// c * xi_L^k; k is reduced mod L.
  static CycInt root(int order, std::int64_t k, const BigInt& c = 1);
  /// Accepts any length; index i contributes to xi^(i mod L).
  static CycInt from_coeffs(int order, const std::vector<BigInt>& coeffs);

  int order() const noexcept { return order_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  void add_root(std::int64_t k, const BigInt& c = 1);

  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  CycInt& operator*=(const CycInt& other);
  CycInt operator-() const;

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, const BigInt& c);

  /// Residue modulo Phi_L, length phi(L).
  std::vector<BigInt> canonical() const;
  bool is_zero() const;
  /// Value if the element is a rational integer.
  std::optional<BigInt> rational_value() const;

  /// sigma_t: xi -> xi^t. Throws NotCoprime unless gcd(t, L) = 1.
  CycInt galois(std::int64_t t) const;
  /// Complex conjugation, sigma_{-1}.
  CycInt conj() const;

  /// Equality in Z[xi_L]. Throws OrderMismatch for different L.
  friend bool operator==(const CycInt& a, const CycInt& b);

 private:
  void require_same_order(const CycInt& other) const;

  int order_;
  std::vector<BigInt> coeffs_;
};

/// a * conj(a) if it is rational, otherwise nullopt (|a|^2 irrational).
std::optional<BigInt> modulus_squared(const CycInt& a);

/// Quadratic Gauss sum over Z_p: sum_x xi_p^{x^2}.
CycInt delta(std::int64_t p);

/// S(u) = sum_{x in F_q} xi_p^{tr(u x^2)}. Throws ZeroArgument for u = 0.
CycInt gauss_S(const FieldCtx& ctx, const FieldElem& u);

/// All (a_0..a_{p-1}), a_i >= 0, sum p, with |sum a_i xi_p^i|^2 = 2p, in
/// colexicographic order. Throws ScaleGuard for p > 13.
std::vector<std::vector<int>> lemma31_solutions(std::int64_t p);

}  // namespace semirds
