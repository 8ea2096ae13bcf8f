#include "semirds/groups.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <sstream>

#include "semirds/arith.hpp"
#include "semirds/error.hpp"

namespace semirds {
namespace {


template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string field_elem_str(const FieldElem& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) os << (i ? "," : "") << a.coeffs[i];
  os << ']';
  return os.str();
}

}  // namespace

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
  std::visit(
      Overloaded{
          [this](const AbelianSpec& s) {
            if (s.factors.empty()) throw Error(Errc::InvalidArgument, "abelian group needs at least one factor");
            for (auto d : s.factors) {
              if (d < 2) throw Error(Errc::InvalidArgument, "abelian factors must be >= 2");
            }
            radices_ = s.factors;
            abelian_ = true;
          },
          [this](const SemidirectSpec& s) {
            if (!is_prime(s.p) || s.p == 2) throw Error(Errc::NotPrime, "semidirect2p2 needs an odd prime p");
            if ((s.sign_a != 1 && s.sign_a != -1) || (s.sign_b != 1 && s.sign_b != -1))
              throw Error(Errc::InvalidArgument, "action signs must be +1 or -1");
            radices_ = {s.p, s.p, 2};
            abelian_ = s.sign_a == 1 && s.sign_b == 1;
          },
          [this](const DihedralSpec& s) {
            if (s.rotations < 2) throw Error(Errc::InvalidArgument, "dihedral group needs rotations >= 2");
            radices_ = {s.rotations, 2};
            abelian_ = s.rotations == 2;
          },
          [this](const QuarticSpec& s) {
            const FieldCtx& k = s.field;
            if (!k.contains(s.e) || !k.contains(s.f)) throw Error(Errc::SpecMismatch, "e, f must lie in the field");
            if (k.pow(s.e, 4) != k.one()) throw Error(Errc::InvalidArgument, "e^4 != 1");
            if (k.mul(s.f, s.f) != k.neg(k.one())) throw Error(Errc::InvalidArgument, "f^2 != -1");
            for (int i = 0; i < 2 * k.degree(); ++i) radices_.push_back(k.characteristic());
            radices_.push_back(4);
            abelian_ = false;
          },
      },
      spec_);

  double size = 1;
  for (auto r : radices_) size *= static_cast<double>(r);
  if (size > static_cast<double>(kMaxOrder)) {
    throw Error(Errc::ScaleGuard, "group order exceeds " + std::to_string(kMaxOrder));
  }
  order_ = 1;
  for (auto r : radices_) order_ *= static_cast<std::uint32_t>(r);

  if (const auto* s = std::get_if<QuarticSpec>(&spec_)) {
    const FieldCtx& k = s->field;
    q_ = static_cast<std::uint32_t>(k.order());
    e_scale_.resize(4 * static_cast<std::size_t>(q_));
    f_scale_.resize(4 * static_cast<std::size_t>(q_));
    field_neg_.resize(q_);
    const auto elems = k.elements();
    for (std::uint32_t r = 0; r < q_; ++r) {
      field_neg_[r] = static_cast<std::uint32_t>(k.rank(k.neg(elems[r])));
      FieldElem ej = k.one();
      FieldElem fj = k.one();
      for (std::size_t j = 0; j < 4; ++j) {
        e_scale_[j * q_ + r] = static_cast<std::uint32_t>(k.rank(k.mul(ej, elems[r])));
        f_scale_[j * q_ + r] = static_cast<std::uint32_t>(k.rank(k.mul(fj, elems[r])));
        ej = k.mul(ej, s->e);
        fj = k.mul(fj, s->f);
      }
    }
    std::uint32_t pv = 1;
    for (int i = 0; i < k.degree(); ++i) {
      p_digits_.insert(p_digits_.begin(), pv);
      pv *= k.characteristic();
    }
  }
}

std::string Group::name() const {
  return std::visit(
      Overloaded{
          [](const AbelianSpec& s) {
            std::string out;
            for (std::size_t i = 0; i < s.factors.size(); ++i) {
              out += (i ? "xZ" : "Z") + std::to_string(s.factors[i]);
            }
            return out;
          },
          [](const SemidirectSpec& s) {
            std::string label = "SD";
            if (s.sign_a == -1 && s.sign_b == -1) label = "G1";
            if (s.sign_a == -1 && s.sign_b == 1) label = "G2";
            if (s.sign_a == 1 && s.sign_b == 1) label = "G3";
            return label + "(p=" + std::to_string(s.p) + ",signs=" + std::to_string(s.sign_a) + "," +
                   std::to_string(s.sign_b) + ")";
          },
          [](const DihedralSpec& s) { return "D" + std::to_string(s.rotations) + "(order " + std::to_string(2 * s.rotations) + ")"; },
          [](const QuarticSpec& s) {
            return "Quartic(q=" + std::to_string(s.field.order()) + ",e=" + field_elem_str(s.e) +
                   ",f=" + field_elem_str(s.f) + ")";
          },
      },
      spec_);
}

std::uint32_t Group::field_add(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = static_cast<std::uint32_t>(radices_.front());
  if (p_digits_.size() == 1) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t out = 0;
  for (auto pv : p_digits_) {
    std::uint32_t s = (a / pv) % p + (b / pv) % p;
    if (s >= p) s -= p;
    out += s * pv;
  }
  return out;
}

GroupElem Group::mul(GroupElem a, GroupElem b) const {
  if (!contains(a) || !contains(b)) throw Error(Errc::SpecMismatch, "element not in group " + name());
  return mul_unchecked(a, b);
}

GroupElem Group::inv(GroupElem a) const {
  if (!contains(a)) throw Error(Errc::SpecMismatch, "element not in group " + name());
  return inv_unchecked(a);
}

GroupElem Group::mul_unchecked(GroupElem a, GroupElem b) const {
  return std::visit(
      Overloaded{
          [&](const AbelianSpec&) {
            std::uint32_t x = a.id, y = b.id, out = 0, place = 1;
            for (std::size_t i = radices_.size(); i-- > 0;) {
              const auto d = static_cast<std::uint32_t>(radices_[i]);
              std::uint32_t s = x % d + y % d;
              if (s >= d) s -= d;
              out += s * place;
              place *= d;
              x /= d;
              y /= d;
            }
            return GroupElem{out};
          },
          [&](const SemidirectSpec& s) {
            const auto p = s.p;
            const std::int64_t c1 = a.id % 2, c2 = b.id % 2;
            const std::int64_t j1 = (a.id / 2) % p, j2 = (b.id / 2) % p;
            const std::int64_t i1 = a.id / (2 * p), i2 = b.id / (2 * p);
            const std::int64_t sa = c1 ? s.sign_a : 1;
            const std::int64_t sb = c1 ? s.sign_b : 1;
            const std::int64_t i = mod(i1 + sa * i2, p), j = mod(j1 + sb * j2, p), c = (c1 + c2) % 2;
            return GroupElem{static_cast<std::uint32_t>((i * p + j) * 2 + c)};
          },
          [&](const DihedralSpec& s) {
            const auto m = s.rotations;
            const std::int64_t c1 = a.id % 2, c2 = b.id % 2;
            const std::int64_t i1 = a.id / 2, i2 = b.id / 2;
            const std::int64_t i = mod(i1 + (c1 ? -i2 : i2), m);
            return GroupElem{static_cast<std::uint32_t>(i * 2 + (c1 + c2) % 2)};
          },
          [&](const QuarticSpec&) {
            const std::uint32_t k1 = a.id % 4, k2 = b.id % 4;
            const std::uint32_t v1 = (a.id / 4) % q_, v2 = (b.id / 4) % q_;
            const std::uint32_t u1 = a.id / (4 * q_), u2 = b.id / (4 * q_);
            // (h1, k1)(h2, k2) = (h1 + phi^{-k1}(h2), k1 + k2)
            const std::uint32_t j = (4 - k1) % 4;
            const std::uint32_t u = field_add(u1, e_scale_[j * q_ + u2]);
            const std::uint32_t v = field_add(v1, f_scale_[j * q_ + v2]);
            return GroupElem{(u * q_ + v) * 4 + (k1 + k2) % 4};
          },
      },
      spec_);
}

GroupElem Group::inv_unchecked(GroupElem a) const {
  return std::visit(
      Overloaded{
          [&](const AbelianSpec&) {
            std::uint32_t x = a.id, out = 0, place = 1;
            for (std::size_t i = radices_.size(); i-- > 0;) {
              const auto d = static_cast<std::uint32_t>(radices_[i]);
              const std::uint32_t digit = x % d;
              out += (digit == 0 ? 0 : d - digit) * place;
              place *= d;
              x /= d;
            }
            return GroupElem{out};
          },
          [&](const SemidirectSpec& s) {
            const auto p = s.p;
            const std::int64_t c = a.id % 2, j = (a.id / 2) % p, i = a.id / (2 * p);
            const std::int64_t sa = c ? s.sign_a : 1;
            const std::int64_t sb = c ? s.sign_b : 1;
            const std::int64_t ni = mod(-sa * i, p), nj = mod(-sb * j, p);
            return GroupElem{static_cast<std::uint32_t>((ni * p + nj) * 2 + c)};
          },
          [&](const DihedralSpec& s) {
            const std::int64_t c = a.id % 2, i = a.id / 2;
            const std::int64_t ni = c ? i : mod(-i, s.rotations);
            return GroupElem{static_cast<std::uint32_t>(ni * 2 + c)};
          },
          [&](const QuarticSpec&) {
            // (h, k)^{-1} = (-phi^k(h), -k)
            const std::uint32_t k = a.id % 4, v = (a.id / 4) % q_, u = a.id / (4 * q_);
            const std::uint32_t nu = field_neg_[e_scale_[k * q_ + u]];
            const std::uint32_t nv = field_neg_[f_scale_[k * q_ + v]];
            return GroupElem{(nu * q_ + nv) * 4 + (4 - k) % 4};
          },
      },
      spec_);
}

GroupElem Group::pow(GroupElem a, std::int64_t e) const {
  if (!contains(a)) throw Error(Errc::SpecMismatch, "element not in group " + name());
  GroupElem base = e < 0 ? inv_unchecked(a) : a;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  GroupElem result = identity();
  while (k > 0) {
    if (k & 1U) result = mul_unchecked(result, base);
    base = mul_unchecked(base, base);
    k >>= 1U;
  }
  return result;
}

std::vector<std::int64_t> Group::coords(GroupElem a) const {
  if (!contains(a)) throw Error(Errc::SpecMismatch, "element not in group " + name());
  std::vector<std::int64_t> out(radices_.size());
  std::uint32_t x = a.id;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    out[i] = x % radices_[i];
    x /= static_cast<std::uint32_t>(radices_[i]);
  }
  return out;
}

GroupElem Group::from_coords(std::span<const std::int64_t> c) const {
  if (c.size() != radices_.size()) {
    throw Error(Errc::SpecMismatch, "expected " + std::to_string(radices_.size()) + " coordinates for " + name());
  }
  std::uint64_t id = 0;
  for (std::size_t i = 0; i < c.size(); ++i) id = id * static_cast<std::uint64_t>(radices_[i]) + mod(c[i], radices_[i]);
  return GroupElem{static_cast<std::uint32_t>(id)};
}

std::vector<GroupElem> Group::elements() const {
  std::vector<GroupElem> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out[i] = GroupElem{i};
  return out;
}

std::int64_t Group::element_order(GroupElem a) const {
  if (!contains(a)) throw Error(Errc::SpecMismatch, "element not in group " + name());
  std::int64_t k = 1;
  GroupElem x = a;
  while (x != identity()) {
    x = mul_unchecked(x, a);
    ++k;
  }
  return k;
}

std::vector<GroupElem> enumerate(const Group& g) { return g.elements(); }

ElemSet subgroup_closure(const Group& g, std::span<const GroupElem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::deque<GroupElem> queue{g.identity()};
  seen[0] = 1;
  ElemSet out;
  while (!queue.empty()) {
    const GroupElem x = queue.front();
    queue.pop_front();
    out.push_back(x);
    for (const GroupElem s : gens) {
      const GroupElem y = g.mul(x, s);
      if (!seen[y.id]) {
        seen[y.id] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemSet> cosets(const Group& g, const ElemSet& n, CosetSide side) {
  std::vector<char> used(g.order(), 0);
  std::vector<ElemSet> out;
  for (const GroupElem x : g.elements()) {
    if (used[x.id]) continue;
    ElemSet coset;
    coset.reserve(n.size());
    for (const GroupElem y : n) {
      const GroupElem z = side == CosetSide::Left ? g.mul(x, y) : g.mul(y, x);
      used[z.id] = 1;
      coset.push_back(z);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

ElemSet centralizer(const Group& g, const ElemSet& n) {
  ElemSet out;
  for (const GroupElem x : g.elements()) {
    const bool commutes =
        std::all_of(n.begin(), n.end(), [&](GroupElem y) { return g.mul(x, y) == g.mul(y, x); });
    if (commutes) out.push_back(x);
  }
  return out;
}

std::int64_t group_exponent(const Group& g, const ElemSet& s) {
  std::int64_t e = 1;
  for (const GroupElem x : s) e = lcm64(e, g.element_order(x));
  return e;
}

bool is_normal(const Group& g, const ElemSet& n) {
  for (const GroupElem x : g.elements()) {
    const GroupElem xi = g.inv(x);
    for (const GroupElem y : n) {
      if (!std::binary_search(n.begin(), n.end(), g.mul(g.mul(xi, y), x))) return false;
    }
  }
  return true;
}

bool is_commutative(const Group& g, const ElemSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.mul(s[i], s[j]) != g.mul(s[j], s[i])) return false;
    }
  }
  return true;
}

bool Subgroup::contains(GroupElem a) const { return std::binary_search(elements.begin(), elements.end(), a); }

Subgroup make_subgroup(const Group& g, std::vector<GroupElem> gens) {
  Subgroup s;
  s.elements = subgroup_closure(g, gens);
  s.gens = std::move(gens);
  s.normal = is_normal(g, s.elements);
  s.abelian = is_commutative(g, s.elements);
  return s;
}

std::vector<Subgroup> subgroups_of_prime_order(const Group& g, std::int64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  std::vector<Subgroup> out;
  std::vector<char> covered(g.order(), 0);
  for (const GroupElem x : g.elements()) {
    if (covered[x.id] || x == g.identity() || g.element_order(x) != p) continue;
    Subgroup s = make_subgroup(g, {x});
    for (const GroupElem y : s.elements) covered[y.id] = 1;
    out.push_back(std::move(s));
  }
  return out;
}

Lemma14Verdict lemma14_necessary(const Group& g, const Subgroup& n, std::int64_t m, std::int64_t n_order) {
  if (!n.normal) throw Error(Errc::NotNormal, "N is not normal in " + g.name());
  if (!n.abelian) throw Error(Errc::NotAbelianN, "N is not abelian");
  if (static_cast<std::int64_t>(n.order()) != n_order || m * n_order != static_cast<std::int64_t>(g.order()) ||
      m % n_order != 0) {
    throw Error(Errc::ParameterMismatch, "need |N| = n, m n = |G| and n | m");
  }
  Lemma14Verdict v;
  v.centralizer_exponent = group_exponent(g, centralizer(g, n.elements));
  const std::int64_t e = v.centralizer_exponent;
  if ((2 * m) % e != 0) {
    v.pass = false;
    v.reason = "exp(C_G(N)) = " + std::to_string(e) + " does not divide 2m = " + std::to_string(2 * m);
    return v;
  }
  const auto involutions = std::count_if(n.elements.begin(), n.elements.end(),
                                         [&](GroupElem x) { return g.element_order(x) == 2; });
  const bool sylow2_noncyclic = involutions >= 2;
  const bool ratio_even = (m / n_order) % 2 == 0;
  if ((sylow2_noncyclic || ratio_even) && m % e != 0) {
    v.pass = false;
    v.reason = "exp(C_G(N)) = " + std::to_string(e) + " does not divide m = " + std::to_string(m) +
               (sylow2_noncyclic ? " (Sylow 2-subgroup of N not cyclic)" : " (m/n even)");
    return v;
  }
  v.reason = "exp(C_G(N)) = " + std::to_string(e) + " is compatible";
  return v;
}

void GroupRingElem::add(GroupElem g, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

std::int64_t GroupRingElem::at(GroupElem g) const {
  auto it = coeffs.find(g);
  return it == coeffs.end() ? 0 : it->second;
}

std::int64_t GroupRingElem::total() const {
  std::int64_t s = 0;
  for (const auto& [g, c] : coeffs) s += c;
  return s;
}

GroupRingElem gr_difference(const Group& g, std::span<const GroupElem> r) {
  std::vector<std::int64_t> counts(g.order(), 0);
  std::vector<GroupElem> inverses;
  inverses.reserve(r.size());
  for (const GroupElem x : r) inverses.push_back(g.inv(x));
  for (const GroupElem x : r) {
    for (const GroupElem yi : inverses) ++counts[g.mul(x, yi).id];
  }
  GroupRingElem out;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (counts[i] != 0) out.coeffs.emplace(GroupElem{i}, counts[i]);
  }
  return out;
}

namespace {

const AbelianSpec& require_abelian(const Group& g) {
  const auto* s = std::get_if<AbelianSpec>(&g.spec());
  if (s == nullptr) throw Error(Errc::NotAbelian, g.name() + " is not given as an abelian product");
  return *s;
}

std::int64_t char_exponent(const AbelianSpec& s, std::int64_t exp, std::span<const std::int64_t> chi,
                           std::span<const std::int64_t> x) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < s.factors.size(); ++i) acc += chi[i] * x[i] * (exp / s.factors[i]);
  return mod(acc, exp);
}

std::int64_t abelian_exponent(const AbelianSpec& s) {
  std::int64_t e = 1;
  for (auto d : s.factors) e = lcm64(e, d);
  return e;
}

}  // namespace

std::int64_t abelian_exponent(const Group& g) { return abelian_exponent(require_abelian(g)); }

std::int64_t abelian_char_exponent(const Group& g, std::span<const std::int64_t> chi, GroupElem x) {
  const AbelianSpec& s = require_abelian(g);
  if (chi.size() != s.factors.size()) throw Error(Errc::SpecMismatch, "character index has wrong arity");
  return char_exponent(s, abelian_exponent(s), chi, g.coords(x));
}

std::vector<std::vector<std::int64_t>> abelian_characters(const Group& g) {
  require_abelian(g);
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(g.order());
  for (const GroupElem x : g.elements()) out.push_back(g.coords(x));
  return out;
}

CycInt abelian_char_value(const Group& g, std::span<const std::int64_t> chi, const GroupRingElem& a) {
  const AbelianSpec& s = require_abelian(g);
  if (chi.size() != s.factors.size()) throw Error(Errc::SpecMismatch, "character index has wrong arity");
  const std::int64_t exp = abelian_exponent(s);
  CycInt out(static_cast<int>(exp));
  for (const auto& [x, c] : a.coeffs) {
    const auto xc = g.coords(x);
    out.add_root(char_exponent(s, exp, chi, xc), c);
  }
  return out;
}

GroupRingElem fourier_inversion(const Group& g, const std::vector<CycInt>& values) {
  const AbelianSpec& s = require_abelian(g);
  const auto chars = abelian_characters(g);
  if (values.size() != chars.size()) throw Error(Errc::SpecMismatch, "need one value per character");
  const std::int64_t exp = abelian_exponent(s);
  GroupRingElem out;
  for (const GroupElem h : g.elements()) {
    const auto hc = g.coords(h);
    CycInt acc(static_cast<int>(exp));
    for (std::size_t i = 0; i < chars.size(); ++i) {
      acc += values[i] * CycInt::root(static_cast<int>(exp), -char_exponent(s, exp, chars[i], hc));
    }
    auto v = acc.rational_value();
    if (!v || !mpz_divisible_ui_p(v->get_mpz_t(), g.order())) {
      throw Error(Errc::InvalidArgument, "character values do not come from an integral group ring element");
    }
    const BigInt a = *v / g.order();
    out.add(h, a.get_si());
  }
  return out;
}

}  // namespace semirds
