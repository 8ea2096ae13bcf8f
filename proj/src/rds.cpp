#include "semirds/rds.hpp"

#include <algorithm>
#include <thread>

#include "semirds/arith.hpp"
#include "semirds/error.hpp"

namespace semirds {

Subgroup check_parameters(const RdsInstance& inst) {
  const auto& [m, n, k, lambda] = inst.params;
  Subgroup sub = make_subgroup(inst.group, inst.n_gens);
  auto fail = [](const std::string& what) { throw Error(Errc::ParameterMismatch, what); };
  if (m < 1 || n < 1 || k < 1 || lambda < 0) fail("parameters must be positive");
  if (static_cast<std::int64_t>(sub.order()) != n) fail("|<N>| = " + std::to_string(sub.order()) + " but n = " + std::to_string(n));
  if (m * n != static_cast<std::int64_t>(inst.group.order())) fail("|G| != m n");
  if (static_cast<std::int64_t>(inst.r.size()) != k) fail("|R| = " + std::to_string(inst.r.size()) + " but k = " + std::to_string(k));
  if (k * (k - 1) != lambda * n * (m - 1)) fail("k(k-1) != lambda n (m-1)");
  for (const auto x : inst.r) {
    if (!inst.group.contains(x)) throw Error(Errc::SpecMismatch, "R contains an element outside the group");
  }
  return sub;
}

BruteVerdict verify_rds_bruteforce(const RdsInstance& inst, unsigned threads) {
  const Subgroup n = check_parameters(inst);
  const Group& g = inst.group;
  const auto& r = inst.r;
  std::vector<GroupElem> inverses;
  inverses.reserve(r.size());
  for (const auto x : r) inverses.push_back(g.inv(x));

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(r.size())));
  std::vector<std::vector<std::int64_t>> partial(threads, std::vector<std::int64_t>(g.order(), 0));
  auto work = [&](unsigned w) {
    auto& counts = partial[w];
    for (std::size_t i = w; i < r.size(); i += threads) {
      for (const auto yi : inverses) ++counts[g.mul(r[i], yi).id];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  std::vector<std::int64_t> counts(g.order(), 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];

  for (const GroupElem x : g.elements()) {
    std::int64_t expected = inst.params.lambda;
    if (x == g.identity()) {
      expected = inst.params.k;
    } else if (n.contains(x)) {
      expected = 0;
    }
    if (counts[x.id] != expected) return BruteVerdict{false, x, expected, counts[x.id]};
  }
  return BruteVerdict{};
}

CharVerdict verify_rds_characters(const RdsInstance& inst) {
  const Group& g = inst.group;
  if (!g.is_abelian_spec()) throw Error(Errc::NotAbelian, g.name() + " is not given as an abelian product");
  check_parameters(inst);
  GroupRingElem r;
  for (const auto x : inst.r) r.add(x, 1);

  const auto chars = abelian_characters(g);
  for (std::size_t i = 1; i < chars.size(); ++i) {
    bool trivial_on_n = true;
    for (const auto x : inst.n_gens) {
      GroupRingElem single;
      single.add(x, 1);
      const CycInt value = abelian_char_value(g, chars[i], single);
      if (value != CycInt::constant(value.order(), 1)) {
        trivial_on_n = false;
        break;
      }
    }
    const BigInt expected = trivial_on_n ? inst.params.k - inst.params.lambda * inst.params.n : inst.params.k;
    const auto actual = modulus_squared(abelian_char_value(g, chars[i], r));
    if (!actual || *actual != expected) return CharVerdict{false, chars[i], expected, actual};
  }
  return CharVerdict{};
}

RdsInstance right_translate(const RdsInstance& inst, GroupElem h) {
  RdsInstance out = inst;
  for (auto& x : out.r) x = inst.group.mul(x, h);
  return out;
}

RdsInstance quadratic_rds(std::int64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  Group g(AbelianSpec{{p, p}});
  RdsInstance inst{g, {g.from_coords(std::vector<std::int64_t>{0, 1})}, {}, {p, p, p, 1}};
  for (std::int64_t y = 0; y < p; ++y) inst.r.push_back(g.from_coords(std::vector<std::int64_t>{y, y * y % p}));
  return inst;
}

S2Triple s_triple(const FieldCtx& k, const FieldElem& e, const FieldElem& f, const FieldElem& s2) {
  const FieldElem one = k.one();
  const FieldElem ratio = k.div(f, k.mul(e, e));
  const FieldElem plus = k.add(one, s2);
  const FieldElem minus = k.mul(ratio, k.sub(one, s2));
  return S2Triple{k.half(k.add(plus, minus)), s2, k.half(k.sub(plus, minus))};
}

namespace {

void require_fourth_roots(const FieldCtx& k, const FieldElem& e, const FieldElem& f) {
  if (k.order() % 4 != 1) throw Error(Errc::NoSolution, "q is not 1 mod 4");
  if (!k.contains(e) || !k.contains(f)) throw Error(Errc::SpecMismatch, "e, f must lie in the field");
  if (k.pow(e, 4) != k.one()) throw Error(Errc::InvalidArgument, "e^4 != 1");
  if (k.mul(f, f) != k.neg(k.one())) throw Error(Errc::InvalidArgument, "f^2 != -1");
}

}  // namespace

std::vector<FieldElem> valid_s2_values(const FieldCtx& k, const FieldElem& e, const FieldElem& f) {
  require_fourth_roots(k, e, f);
  std::vector<FieldElem> out;
  for (const auto& s2 : k.elements()) {
    if (k.is_zero(s2)) continue;
    const S2Triple t = s_triple(k, e, f, s2);
    const FieldElem prod = k.mul(k.mul(t.s1, t.s2), t.s3);
    // s1 s2 s3 = s2 (1 + s2^2) / 2
    if (prod != k.half(k.mul(s2, k.add(k.one(), k.mul(s2, s2))))) {
      throw Error(Errc::InvalidArgument, "s-triple identity failed; e, f inconsistent");
    }
    if (quad_char(k, prod) == -1) out.push_back(s2);
  }
  return out;
}

S2Triple find_s2(const FieldCtx& k, const FieldElem& e, const FieldElem& f) {
  require_fourth_roots(k, e, f);
  if (k.order() <= 9) throw Error(Errc::InvalidArgument, "the construction needs q > 9");
  for (const auto& s2 : k.elements()) {
    if (k.is_zero(s2)) continue;
    const S2Triple t = s_triple(k, e, f, s2);
    const FieldElem prod = k.mul(k.mul(t.s1, t.s2), t.s3);
    if (prod != k.half(k.mul(s2, k.add(k.one(), k.mul(s2, s2))))) {
      throw Error(Errc::InvalidArgument, "s-triple identity failed; e, f inconsistent");
    }
    if (quad_char(k, prod) == -1) return t;
  }
  throw Error(Errc::NotFound, "no s2 with eta(s1 s2 s3) = -1");
}

namespace {

std::vector<std::int64_t> quartic_coords(const FieldElem& u, const FieldElem& v, std::int64_t k) {
  std::vector<std::int64_t> c(u.coeffs.begin(), u.coeffs.end());
  c.insert(c.end(), v.coeffs.begin(), v.coeffs.end());
  c.push_back(k);
  return c;
}

}  // namespace

RdsInstance construct_theorem22(const FieldCtx& k, const FieldElem& e, const FieldElem& f) {
  const S2Triple t = find_s2(k, e, f);
  Group g(QuarticSpec{k, e, f});
  const auto q = static_cast<std::int64_t>(k.order());
  RdsInstance inst{g, {}, {}, {4 * q, q, 4 * q, 4}};
  for (int i = 0; i < k.degree(); ++i) inst.n_gens.push_back(g.from_coords(quartic_coords(k.zero(), k.basis(i), 0)));

  const std::array<FieldElem, 4> inv_s{k.one(), k.inv(t.s1), k.inv(t.s2), k.inv(t.s3)};
  const auto elems = k.elements();
  for (std::int64_t i = 0; i < 4; ++i) {
    for (const auto& y : elems) {
      const FieldElem v = k.mul(inv_s[static_cast<std::size_t>(i)], k.mul(y, y));
      inst.r.push_back(g.from_coords(quartic_coords(y, v, i)));
    }
  }
  return inst;
}

ComponentReport quartic_component_check(const RdsInstance& inst) {
  const Group& g = inst.group;
  if (!std::holds_alternative<QuarticSpec>(g.spec())) throw Error(Errc::SpecMismatch, "component check needs a quartic group");
  const Subgroup n = check_parameters(inst);
  const GroupRingElem diff = gr_difference(g, inst.r);
  ComponentReport report;
  report.ok.fill(true);
  const std::int64_t q = inst.params.n;
  for (const GroupElem x : g.elements()) {
    const auto k = static_cast<std::size_t>(g.coords(x).back());
    std::int64_t expected = 4;
    if (k == 0) {
      if (x == g.identity()) {
        expected = 4 * q;
      } else if (n.contains(x)) {
        expected = 0;
      }
    }
    if (diff.at(x) != expected) report.ok[k] = false;
  }
  return report;
}

}  // namespace semirds
