#pragma once

// Finite fields F_q, q = p^n with p odd, in the power basis of a root of a
// monic irreducible modulus.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace semirds {

/// Element of F_q as its coordinate vector (low degree first), each in [0, p).
struct FieldElem {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

class FieldCtx {
 public:
  /// Builds F_{p^n}. Without a modulus the lexicographically smallest monic
  /// irreducible of degree n is used (coefficients compared low degree first).
  /// Throws NotPrime, EvenCharacteristic, ReduciblePolynomial, InvalidArgument.
  static FieldCtx create(std::int64_t p, int n,
                         std::optional<std::vector<std::int64_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Monic modulus, length n + 1, low degree first.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_coeffs(std::span<const std::int64_t> c) const;
  /// Power-basis element x^i, 0 <= i < n.
  FieldElem basis(int i) const;

  /// Rank in [0, q): base-p number with the constant coefficient most
  /// significant, so rank order is lexicographic coordinate order.
  std::uint64_t rank(const FieldElem& a) const;
  FieldElem unrank(std::uint64_t r) const;
  /// All q elements in rank order.
  std::vector<FieldElem> elements() const;

  bool contains(const FieldElem& a) const noexcept;
  bool is_zero(const FieldElem& a) const noexcept;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem scale(const FieldElem& a, std::uint32_t c) const;
  FieldElem pow(const FieldElem& a, std::uint64_t e) const;
  /// Throws ZeroArgument on 0.
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;

  /// Multiplication by 1/2, via the precomputed inverse of 2 in Z_p.
  FieldElem half(const FieldElem& a) const { return scale(a, inv2_); }
  FieldElem quarter(const FieldElem& a) const { return scale(a, inv4_); }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldCtx(std::uint32_t p, int n, std::vector<std::uint32_t> modulus);

  std::uint32_t p_ = 0;
  int n_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t inv2_ = 0;
  std::uint32_t inv4_ = 0;
};

/// Absolute trace tr(x) = x + x^p + ... + x^{p^{n-1}}, as an element of Z_p.
std::uint32_t trace(const FieldCtx& ctx, const FieldElem& x);

/// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
/// Computed as x^{(q-1)/2}.
int quad_char(const FieldCtx& ctx, const FieldElem& x);

/// Quadratic character by lookup in an explicit table of squares. Used to
/// cross-check quad_char for small fields.
std::vector<int> quad_char_table(const FieldCtx& ctx);

struct FourthRoots {
  std::vector<FieldElem> e_list;  // e^4 = 1, sorted
  std::vector<FieldElem> f_list;  // f^2 = -1, sorted
};

/// Throws NoSolution unless q = 1 (mod 4).
FourthRoots fourth_roots(const FieldCtx& ctx);

/// Sum over nonzero x of eta(2x + x^3).
std::int64_t eta_cubic_sum(const FieldCtx& ctx);

/// Exhaustive irreducibility test for a monic polynomial over Z_p
/// (trial division by every monic polynomial of degree <= deg/2).
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

}  // namespace semirds
