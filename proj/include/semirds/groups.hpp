#pragma once

// The finite groups used in this project, as coordinate tuples with
// spec-dispatched multiplication:
//
//   abelian        Z_{d_1} x ... x Z_{d_k}                coords (x_1..x_k)
//   semidirect2p2  (Z_p x Z_p) x| Z_2, c a c = a^{s_a},   coords (i, j, c) = a^i b^j c^c
//                  c b c = b^{s_b}
//   dihedral       Z_m x| Z_2, c a c = a^{-1}             coords (i, c) = a^i c^c
//   quartic        (K x K) x| Z_4, x^{-1} h x = phi(h),   coords (u, v, k) = (u, v) x^k
//                  phi(u, v) = (e u, f v)
//
// Elements are identified by their rank in lexicographic coordinate order,
// so the identity has rank 0 and sorting by rank is the canonical order.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "semirds/cyclo.hpp"
#include "semirds/ff.hpp"

namespace semirds {

struct AbelianSpec {
  std::vector<std::int64_t> factors;
};

/// sign_a, sign_b in {-1, +1}: G1 = (-1, -1), G2 = (-1, +1), G3 = (+1, +1).
struct SemidirectSpec {
  std::int64_t p = 3;
  int sign_a = -1;
  int sign_b = -1;
};

struct DihedralSpec {
  std::int64_t rotations = 3;
};

struct QuarticSpec {
  FieldCtx field;
  FieldElem e;
  FieldElem f;
};

using GroupSpec = std::variant<AbelianSpec, SemidirectSpec, DihedralSpec, QuarticSpec>;

struct GroupElem {
  std::uint32_t id = 0;

  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

/// Sorted, duplicate-free element list.
using ElemSet = std::vector<GroupElem>;

class Group {
 public:
  static constexpr std::uint64_t kMaxOrder = 1'000'000;

  /// Validates the spec; throws InvalidArgument / NotPrime / ScaleGuard.
  explicit Group(GroupSpec spec);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::string name() const;
  std::uint32_t order() const noexcept { return order_; }
  std::size_t arity() const noexcept { return radices_.size(); }
  bool is_abelian() const noexcept { return abelian_; }
  bool is_abelian_spec() const noexcept { return std::holds_alternative<AbelianSpec>(spec_); }

  GroupElem identity() const noexcept { return GroupElem{0}; }
  bool contains(GroupElem a) const noexcept { return a.id < order_; }

  /// Throw SpecMismatch for elements outside the group.
  GroupElem mul(GroupElem a, GroupElem b) const;
  GroupElem inv(GroupElem a) const;
  GroupElem pow(GroupElem a, std::int64_t e) const;

  std::vector<std::int64_t> coords(GroupElem a) const;
  /// Coordinates are reduced modulo their radix; wrong arity is SpecMismatch.
  GroupElem from_coords(std::span<const std::int64_t> c) const;

  std::vector<GroupElem> elements() const;
  std::int64_t element_order(GroupElem a) const;

 private:
  GroupElem mul_unchecked(GroupElem a, GroupElem b) const;
  GroupElem inv_unchecked(GroupElem a) const;
  std::uint32_t field_add(std::uint32_t a, std::uint32_t b) const;

  GroupSpec spec_;
  std::vector<std::int64_t> radices_;
  std::uint32_t order_ = 1;
  bool abelian_ = false;

  // quartic only: ranks of phi^j applied to each field element, j = 0..3
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> e_scale_;  // [j * q + rank]
  std::vector<std::uint32_t> f_scale_;
  std::vector<std::uint32_t> field_neg_;
  std::vector<std::uint32_t> p_digits_;  // base-p place values, most significant first
};

std::vector<GroupElem> enumerate(const Group& g);

/// Closure of the generators under multiplication (breadth first), sorted.
ElemSet subgroup_closure(const Group& g, std::span<const GroupElem> gens);

enum class CosetSide { Left, Right };

/// Cosets gN (Left) or Ng (Right), each sorted, listed by minimal element.
std::vector<ElemSet> cosets(const Group& g, const ElemSet& n, CosetSide side);

ElemSet centralizer(const Group& g, const ElemSet& n);
/// lcm of the element orders of s.
std::int64_t group_exponent(const Group& g, const ElemSet& s);
bool is_normal(const Group& g, const ElemSet& n);
bool is_commutative(const Group& g, const ElemSet& s);

/// A subgroup with its normality and commutativity determined on creation.
struct Subgroup {
  std::vector<GroupElem> gens;
  ElemSet elements;
  bool normal = false;
  bool abelian = false;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(GroupElem a) const;
};

Subgroup make_subgroup(const Group& g, std::vector<GroupElem> gens);

/// Every subgroup of prime order p, ordered by their smallest generator.
std::vector<Subgroup> subgroups_of_prime_order(const Group& g, std::int64_t p);

struct Lemma14Verdict {
  bool pass = true;
  std::int64_t centralizer_exponent = 0;
  std::string reason;
};

/// Necessary condition on exp(C_G(N)) for an (m, n, m, m/n) RDS relative to N.
/// Throws NotNormal, NotAbelianN, ParameterMismatch.
Lemma14Verdict lemma14_necessary(const Group& g, const Subgroup& n, std::int64_t m, std::int64_t n_order);

struct GroupRingElem {
  std::map<GroupElem, std::int64_t> coeffs;  // zero coefficients omitted

  void add(GroupElem g, std::int64_t c);
  std::int64_t at(GroupElem g) const;
  std::int64_t total() const;

  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;
};

/// The multiset {r1 r2^{-1} : r1, r2 in R}.
GroupRingElem gr_difference(const Group& g, std::span<const GroupElem> r);

/// Characters of an abelian spec, indexed by residue tuples in lexicographic
/// order (index 0 is principal). Throws NotAbelian for other specs.
std::vector<std::vector<std::int64_t>> abelian_characters(const Group& g);

/// lcm of the factors of an abelian spec. Throws NotAbelian.
std::int64_t abelian_exponent(const Group& g);

/// t with chi(x) = xi_L^t, L = abelian_exponent(g). Throws NotAbelian.
std::int64_t abelian_char_exponent(const Group& g, std::span<const std::int64_t> chi, GroupElem x);

/// chi(A) in Z[xi_L] with L = exp(G). Throws NotAbelian.
CycInt abelian_char_value(const Group& g, std::span<const std::int64_t> chi, const GroupRingElem& a);

/// Recovers A from its character values (listed in abelian_characters order)
/// via a_h = (1/|G|) sum_chi chi(A) conj(chi(h)).
GroupRingElem fourier_inversion(const Group& g, const std::vector<CycInt>& values);

}  // namespace semirds
