#include "semirds/mub.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>

#include "semirds/arith.hpp"
#include "semirds/error.hpp"

namespace semirds {

MubFamily mub_from_abelian_rds(const RdsInstance& inst) {
  const Group& g = inst.group;
  if (!g.is_abelian_spec()) throw Error(Errc::NotAbelian, g.name() + " is not given as an abelian product");
  const RdsParams& prm = inst.params;
  if (prm.k != prm.m || !prm.semi_regular()) throw Error(Errc::NotSemiRegular, "need k = m = n lambda");
  const BruteVerdict v = verify_rds_bruteforce(inst);
  if (!v.valid) throw Error(Errc::InvalidRds, "input is not a relative difference set");

  // coordinates: R sorted by coset of N
  const Subgroup n = make_subgroup(g, inst.n_gens);
  std::vector<std::size_t> coset_of(g.order());
  const auto cs = cosets(g, n.elements, CosetSide::Right);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (const auto x : cs[i]) coset_of[x.id] = i;
  std::vector<GroupElem> r = inst.r;
  std::sort(r.begin(), r.end(), [&](GroupElem a, GroupElem b) { return coset_of[a.id] < coset_of[b.id]; });

  MubFamily fam;
  fam.m = prm.m;
  fam.L = static_cast<int>(abelian_exponent(g));

  std::map<std::vector<std::int64_t>, std::size_t> class_index;
  for (const auto& chi : abelian_characters(g)) {
    std::vector<std::int64_t> restriction;
    for (const auto x : inst.n_gens) restriction.push_back(abelian_char_exponent(g, chi, x));
    auto [it, inserted] = class_index.try_emplace(restriction, fam.bases.size());
    if (inserted) {
      std::string label = "N:[";
      for (std::size_t i = 0; i < restriction.size(); ++i) label += (i ? "," : "") + std::to_string(restriction[i]);
      fam.bases.push_back(MubBasis{label + "]", false, {}});
    }
    std::vector<CycInt> vec;
    vec.reserve(r.size());
    for (const auto x : r) vec.push_back(CycInt::root(fam.L, abelian_char_exponent(g, chi, x)));
    fam.bases[it->second].vectors.push_back(std::move(vec));
  }

  MubBasis standard{"standard", true, {}};
  for (std::int64_t i = 0; i < prm.m; ++i) {
    std::vector<CycInt> e(static_cast<std::size_t>(prm.m), CycInt(fam.L));
    e[static_cast<std::size_t>(i)] = CycInt::constant(fam.L, 1);
    standard.vectors.push_back(std::move(e));
  }
  fam.bases.push_back(std::move(standard));
  return fam;
}

CycInt inner_product(const std::vector<CycInt>& u, const std::vector<CycInt>& v) {
  if (u.size() != v.size() || u.empty()) throw Error(Errc::InvalidArgument, "vector lengths differ");
  const int L = u.front().order();
  std::vector<BigInt> acc(static_cast<std::size_t>(L), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& a = u[i].coeffs();
    const auto& b = v[i].coeffs();
    if (v[i].order() != L || u[i].order() != L) throw Error(Errc::OrderMismatch, "entries have different orders");
    for (int s = 0; s < L; ++s) {
      if (sgn(a[static_cast<std::size_t>(s)]) == 0) continue;
      for (int t = 0; t < L; ++t) {
        if (sgn(b[static_cast<std::size_t>(t)]) == 0) continue;
        acc[static_cast<std::size_t>((s - t + L) % L)] += a[static_cast<std::size_t>(s)] * b[static_cast<std::size_t>(t)];
      }
    }
  }
  return CycInt::from_coeffs(L, acc);
}

namespace {

std::optional<MubWitness> check_pair(const MubFamily& fam, std::size_t a, std::size_t b) {
  const MubBasis& ba = fam.bases[a];
  const MubBasis& bb = fam.bases[b];
  const BigInt wa = ba.standard ? 1 : fam.m;
  const BigInt wb = bb.standard ? 1 : fam.m;
  for (std::size_t i = 0; i < ba.vectors.size(); ++i) {
    for (std::size_t j = (a == b ? i : 0); j < bb.vectors.size(); ++j) {
      const CycInt ip = inner_product(ba.vectors[i], bb.vectors[j]);
      if (a == b) {
        const BigInt expected = i == j ? wa : BigInt(0);
        const auto val = ip.rational_value();
        if (!val || *val != expected) return MubWitness{a, i, b, j, i == j ? "norm differs from weight" : "not orthogonal"};
      } else {
        const auto mod2 = modulus_squared(ip);
        if (!mod2 || *mod2 * fam.m != wa * wb) return MubWitness{a, i, b, j, "not unbiased"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MubVerdict verify_mub_exact(const MubFamily& fam, unsigned threads) {
  MubVerdict verdict;
  for (std::size_t a = 0; a < fam.bases.size(); ++a) {
    const auto& basis = fam.bases[a];
    bool shape = std::cmp_equal(basis.vectors.size(), fam.m);
    for (const auto& vec : basis.vectors) {
      shape = shape && std::cmp_equal(vec.size(), fam.m);
      for (const auto& x : vec) shape = shape && x.order() == fam.L;
    }
    if (!shape) {
      verdict.valid = false;
      verdict.witness = MubWitness{a, 0, a, 0, "basis does not have m vectors of length m"};
      return verdict;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < fam.bases.size(); ++a)
    for (std::size_t b = a; b < fam.bases.size(); ++b) pairs.emplace_back(a, b);
  std::vector<std::optional<MubWitness>> found(pairs.size());
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(pairs.size(), 1))));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < pairs.size(); i += threads) found[i] = check_pair(fam, pairs[i].first, pairs[i].second);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (auto& f : found) {
    if (f) {
      verdict.valid = false;
      verdict.witness = std::move(f);
      return verdict;
    }
  }
  verdict.a_squared_denominator = fam.m;
  return verdict;
}

std::vector<std::vector<std::vector<std::complex<double>>>> mub_to_float(const MubFamily& fam) {
  std::vector<std::vector<std::vector<std::complex<double>>>> out;
  const double scale = 1.0 / std::sqrt(static_cast<double>(fam.m));
  for (const auto& basis : fam.bases) {
    auto& ob = out.emplace_back();
    for (const auto& vec : basis.vectors) {
      auto& ov = ob.emplace_back();
      for (const auto& x : vec) {
        std::complex<double> z = 0;
        for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
          z += x.coeffs()[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / fam.L);
        }
        ov.push_back(basis.standard ? z : z * scale);
      }
    }
  }
  return out;
}

namespace {

std::int64_t min_prime_power_part(std::int64_t d) {
  std::int64_t best = d;
  for (auto [p, e] : factorize(d)) {
    std::int64_t part = 1;
    for (int i = 0; i < e; ++i) part *= p;
    best = std::min(best, part);
  }
  return best;
}

}  // namespace

std::int64_t macneish_bound(std::int64_t d) {
  if (d < 2) throw Error(Errc::InvalidArgument, "d must be at least 2");
  return min_prime_power_part(d) + 1;
}

bool wocjan_gate(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 1) throw Error(Errc::InvalidArgument, "need m >= 2 and n >= 1");
  return n > min_prime_power_part(m);
}

}  // namespace semirds
