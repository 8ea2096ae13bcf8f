#include "semirds/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "semirds/arith.hpp"
#include "semirds/error.hpp"

namespace semirds {
namespace {

// Exact quotient of a by monic b; the remainder must vanish.
std::vector<BigInt> exact_divide(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<BigInt> quot(a.size() - db, 0);
  for (std::size_t d = a.size(); d-- > db;) {
    const BigInt lead = a[d];
    if (lead == 0) continue;
    const std::size_t shift = d - db;
    quot[shift] = lead;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw Error(Errc::InvalidArgument, "cyclotomic division left a remainder");
  }
  return quot;
}

}  // namespace

const CycPoly& cyclotomic_polynomial(int order) {
  if (order < 1) throw Error(Errc::InvalidArgument, "root-of-unity order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return *it->second;
  }
  std::vector<BigInt> num(static_cast<std::size_t>(order) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(order)] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) num = exact_divide(std::move(num), cyclotomic_polynomial(d).coeffs);
  }
  auto poly = std::make_unique<CycPoly>(CycPoly{order, std::move(num)});
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(order, std::move(poly));
  return *it->second;
}

CycInt::CycInt(int order) : order_(order) {
  if (order < 1) throw Error(Errc::InvalidArgument, "root-of-unity order must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(order), 0);
}

CycInt CycInt::constant(int order, const BigInt& c) {
  CycInt r(order);
  r.coeffs_[0] = c;
  return r;
}

CycInt CycInt::root(int order, std::int64_t k, const BigInt& c) {
  CycInt r(order);
  r.add_root(k, c);
  return r;
}

CycInt CycInt::from_coeffs(int order, const std::vector<BigInt>& coeffs) {
  CycInt r(order);
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs_[i % static_cast<std::size_t>(order)] += coeffs[i];
  return r;
}

void CycInt::add_root(std::int64_t k, const BigInt& c) { coeffs_[static_cast<std::size_t>(mod(k, order_))] += c; }

void CycInt::require_same_order(const CycInt& other) const {
  if (order_ != other.order_) {
    throw Error(Errc::OrderMismatch,
                "orders " + std::to_string(order_) + " and " + std::to_string(other.order_));
  }
}

CycInt& CycInt::operator+=(const CycInt& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& other) { return *this = *this * other; }

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.require_same_order(b);
  const auto L = static_cast<std::size_t>(a.order_);
  CycInt r(a.order_);
  for (std::size_t i = 0; i < L; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < L; ++j) {
      if (b.coeffs_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= L) k -= L;
      r.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

CycInt operator*(CycInt a, const BigInt& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

std::vector<BigInt> CycInt::canonical() const {
  const CycPoly& phi = cyclotomic_polynomial(order_);
  const auto deg = static_cast<std::size_t>(phi.degree());
  std::vector<BigInt> a = coeffs_;
  for (std::size_t d = a.size(); d-- > deg;) {
    if (a[d] == 0) continue;
    const BigInt lead = a[d];
    const std::size_t shift = d - deg;
    for (std::size_t i = 0; i <= deg; ++i) a[shift + i] -= lead * phi.coeffs[i];
  }
  a.resize(deg);
  return a;
}

bool CycInt::is_zero() const {
  for (const auto& c : canonical()) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<BigInt> CycInt::rational_value() const {
  auto c = canonical();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) return std::nullopt;
  }
  // Phi_1 = x - 1 has degree 1, so Z[xi_1] = Z keeps one coordinate.
  return c.empty() ? BigInt(0) : c[0];
}

CycInt CycInt::galois(std::int64_t t) const {
  if (std::gcd(mod(t, order_), static_cast<std::int64_t>(order_)) != 1) {
    throw Error(Errc::NotCoprime, "galois exponent " + std::to_string(t) + " shares a factor with " +
                                      std::to_string(order_));
  }
  CycInt r(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    r.add_root(static_cast<std::int64_t>(i) * t, coeffs_[i]);
  }
  return r;
}

CycInt CycInt::conj() const { return galois(-1); }

bool operator==(const CycInt& a, const CycInt& b) {
  a.require_same_order(b);
  return (a - b).is_zero();
}

std::optional<BigInt> modulus_squared(const CycInt& a) { return (a * a.conj()).rational_value(); }

CycInt delta(std::int64_t p) {
  if (!is_prime(p) || p == 2) throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  CycInt r(static_cast<int>(p));
  for (std::int64_t x = 0; x < p; ++x) r.add_root(x * x);
  return r;
}

CycInt gauss_S(const FieldCtx& ctx, const FieldElem& u) {
  if (ctx.is_zero(u)) throw Error(Errc::ZeroArgument, "S(u) requires u != 0");
  CycInt r(static_cast<int>(ctx.characteristic()));
  for (const auto& x : ctx.elements()) {
    r.add_root(trace(ctx, ctx.mul(u, ctx.mul(x, x))));
  }
  return r;
}

std::vector<std::vector<int>> lemma31_solutions(std::int64_t p) {
  if (!is_prime(p) || p == 2) throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  if (p > 13) throw Error(Errc::ScaleGuard, "lemma31 enumeration is limited to p <= 13");
  const int n = static_cast<int>(p);
  const BigInt target = 2 * p;
  std::vector<std::vector<int>> solutions;
  std::vector<int> a(static_cast<std::size_t>(n), 0);

  // Colex order: the last coordinate varies slowest.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == 0) {
      a[0] = remaining;
      CycInt value(n);
      for (int i = 0; i < n; ++i) {
        if (a[static_cast<std::size_t>(i)] != 0) value.add_root(i, a[static_cast<std::size_t>(i)]);
      }
      auto m2 = modulus_squared(value);
      if (m2 && *m2 == target) solutions.push_back(a);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      a[static_cast<std::size_t>(pos)] = v;
      self(self, pos - 1, remaining - v);
    }
    a[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, n - 1, n);
  return solutions;
}

}  // namespace semirds
