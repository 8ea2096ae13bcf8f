#include "semirds/ff.hpp"

#include <algorithm>
#include <string>

#include "semirds/arith.hpp"
#include "semirds/error.hpp"

namespace semirds {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over Z_p.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      std::uint64_t t = (lead * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

// Enumerates the monic polynomials of degree d over Z_p in lexicographic order
// of the low-degree-first coefficient tuple; returns false after the last one.
bool next_monic(Poly& poly, std::uint32_t p) {
  // poly has size d + 1 with poly[d] == 1; position 0 is most significant.
  const std::size_t d = poly.size() - 1;
  for (std::size_t i = d; i-- > 0;) {
    if (poly[i] + 1 < p) {
      ++poly[i];
      for (std::size_t j = i + 1; j < d; ++j) poly[j] = 0;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    do {
      if (poly_rem(f, g, p).empty()) return false;
    } while (next_monic(g, p));
  }
  return true;
}

FieldCtx::FieldCtx(std::uint32_t p, int n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < n; ++i) q_ *= p;
  inv2_ = static_cast<std::uint32_t>(inv_mod(2, p));
  inv4_ = static_cast<std::uint32_t>(inv_mod(4, p));
}

FieldCtx FieldCtx::create(std::int64_t p, int n, std::optional<std::vector<std::int64_t>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  if (n < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  if (p > 65521) throw Error(Errc::InvalidArgument, "characteristic too large");
  double size = 1;
  for (int i = 0; i < n; ++i) size *= static_cast<double>(p);
  if (size > 4.0e9) throw Error(Errc::ScaleGuard, "field order exceeds 2^32");
  const auto up = static_cast<std::uint32_t>(p);

  Poly mod_poly;
  if (modulus) {
    if (modulus->size() != static_cast<std::size_t>(n) + 1)
      throw Error(Errc::InvalidArgument, "modulus must have n + 1 coefficients");
    for (auto c : *modulus) mod_poly.push_back(static_cast<std::uint32_t>(semirds::mod(c, p)));
    if (mod_poly.back() != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");
    if (!is_irreducible(up, mod_poly))
      throw Error(Errc::ReduciblePolynomial, "modulus is reducible over Z_" + std::to_string(p));
  } else if (n == 1) {
    mod_poly = {0, 1};
  } else {
    mod_poly.assign(static_cast<std::size_t>(n) + 1, 0);
    mod_poly.back() = 1;
    bool found = false;
    do {
      if (is_irreducible(up, mod_poly)) {
        found = true;
        break;
      }
    } while (next_monic(mod_poly, up));
    if (!found) throw Error(Errc::NotFound, "no irreducible polynomial found");
  }
  return FieldCtx(up, n, std::move(mod_poly));
}

FieldElem FieldCtx::zero() const { return FieldElem{Poly(static_cast<std::size_t>(n_), 0)}; }

FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::from_int(std::int64_t v) const {
  FieldElem r = zero();
  r.coeffs[0] = static_cast<std::uint32_t>(semirds::mod(v, p_));
  return r;
}

FieldElem FieldCtx::from_coeffs(std::span<const std::int64_t> c) const {
  if (c.size() != static_cast<std::size_t>(n_))
    throw Error(Errc::InvalidArgument, "field element needs " + std::to_string(n_) + " coordinates");
  FieldElem r = zero();
  for (std::size_t i = 0; i < c.size(); ++i) r.coeffs[i] = static_cast<std::uint32_t>(semirds::mod(c[i], p_));
  return r;
}

FieldElem FieldCtx::basis(int i) const {
  if (i < 0 || i >= n_) throw Error(Errc::InvalidArgument, "basis index out of range");
  FieldElem r = zero();
  r.coeffs[static_cast<std::size_t>(i)] = 1;
  return r;
}

std::uint64_t FieldCtx::rank(const FieldElem& a) const {
  std::uint64_t r = 0;
  for (auto c : a.coeffs) r = r * p_ + c;
  return r;
}

FieldElem FieldCtx::unrank(std::uint64_t r) const {
  FieldElem a = zero();
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    a.coeffs[i] = static_cast<std::uint32_t>(r % p_);
    r /= p_;
  }
  return a;
}

std::vector<FieldElem> FieldCtx::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (std::uint64_t r = 0; r < q_; ++r) out.push_back(unrank(r));
  return out;
}

bool FieldCtx::contains(const FieldElem& a) const noexcept {
  if (a.coeffs.size() != static_cast<std::size_t>(n_)) return false;
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [this](std::uint32_t c) { return c < p_; });
}

bool FieldCtx::is_zero(const FieldElem& a) const noexcept {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    std::uint32_t s = r.coeffs[i] + b.coeffs[i];
    r.coeffs[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
  FieldElem r = a;
  for (auto& c : r.coeffs) c = c == 0 ? 0 : p_ - c;
  return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem FieldCtx::scale(const FieldElem& a, std::uint32_t c) const {
  FieldElem r = a;
  for (auto& x : r.coeffs) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * c % p_);
  return r;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  const auto n = static_cast<std::size_t>(n_);
  if (n == 1) {
    return FieldElem{{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.coeffs[0]) * b.coeffs[0] % p_)}};
  }
  std::vector<std::uint64_t> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a.coeffs[i]) * b.coeffs[j]) % p_;
    }
  }
  // x^n = -(m_0 + ... + m_{n-1} x^{n-1})
  for (std::size_t d = 2 * n - 1; d-- > n;) {
    const std::uint64_t lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      prod[d - n + i] = (prod[d - n + i] + (p_ - modulus_[i]) % p_ * lead) % p_;
    }
  }
  FieldElem r = zero();
  for (std::size_t i = 0; i < n; ++i) r.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

FieldElem FieldCtx::pow(const FieldElem& a, std::uint64_t e) const {
  FieldElem result = one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  if (is_zero(a)) throw Error(Errc::ZeroArgument, "inverse of zero");
  return pow(a, q_ - 2);
}

FieldElem FieldCtx::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

std::uint32_t trace(const FieldCtx& ctx, const FieldElem& x) {
  FieldElem acc = ctx.zero();
  FieldElem term = x;
  for (int i = 0; i < ctx.degree(); ++i) {
    acc = ctx.add(acc, term);
    term = ctx.pow(term, ctx.characteristic());
  }
  for (std::size_t i = 1; i < acc.coeffs.size(); ++i) {
    if (acc.coeffs[i] != 0) throw Error(Errc::InvalidArgument, "trace left the prime field");
  }
  return acc.coeffs[0];
}

int quad_char(const FieldCtx& ctx, const FieldElem& x) {
  if (ctx.is_zero(x)) return 0;
  FieldElem r = ctx.pow(x, (ctx.order() - 1) / 2);
  return r == ctx.one() ? 1 : -1;
}

std::vector<int> quad_char_table(const FieldCtx& ctx) {
  std::vector<int> table(ctx.order(), -1);
  table[0] = 0;
  for (const auto& y : ctx.elements()) {
    if (ctx.is_zero(y)) continue;
    table[ctx.rank(ctx.mul(y, y))] = 1;
  }
  return table;
}

FourthRoots fourth_roots(const FieldCtx& ctx) {
  if (ctx.order() % 4 != 1) throw Error(Errc::NoSolution, "q is not 1 mod 4");
  FourthRoots out;
  const FieldElem one = ctx.one();
  const FieldElem minus_one = ctx.neg(one);
  for (const auto& x : ctx.elements()) {
    const FieldElem sq = ctx.mul(x, x);
    if (sq == minus_one) out.f_list.push_back(x);
    if (ctx.mul(sq, sq) == one) out.e_list.push_back(x);
  }
  return out;
}

std::int64_t eta_cubic_sum(const FieldCtx& ctx) {
  std::int64_t sum = 0;
  const FieldElem two = ctx.from_int(2);
  for (const auto& x : ctx.elements()) {
    if (ctx.is_zero(x)) continue;
    const FieldElem cube = ctx.mul(ctx.mul(x, x), x);
    sum += quad_char(ctx, ctx.add(ctx.mul(two, x), cube));
  }
  return sum;
}

}  // namespace semirds
