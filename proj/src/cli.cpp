#include "semirds/cli.hpp"

#include <CLI11.hpp>

#include <fstream>

#include "semirds/arith.hpp"
#include "semirds/bent.hpp"
#include "semirds/error.hpp"
#include "semirds/json_io.hpp"
#include "semirds/mub.hpp"
#include "semirds/search.hpp"

namespace semirds {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

// Inline JSON if it looks like JSON, otherwise a file path.
Json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && std::string("{[-0123456789").find(arg[first]) != std::string::npos) {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, e.what());
    }
  }
  return read_json_file(arg);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// a_s = 4 and a_{s + 2^i t} = 1 for i = 0, 1, 2, zero elsewhere
bool fits_lemma31_template(const std::vector<int>& a) {
  const int p = static_cast<int>(a.size());
  for (int s = 0; s < p; ++s) {
    for (int t = 1; t < p; ++t) {
      std::vector<int> want(a.size(), 0);
      want[static_cast<std::size_t>(s)] = 4;
      for (int i = 0; i < 3; ++i) want[static_cast<std::size_t>((s + (1 << i) * t) % p)] += 1;
      if (want == a) return true;
    }
  }
  return false;
}

struct ConstructArgs {
  std::int64_t q = 0;
  std::string e, f, modulus;
  bool all = false;
};

int run_construct(const ConstructArgs& a, std::ostream& out) {
  const auto pp = prime_power(a.q);
  if (!pp) throw Error(Errc::NotPrime, std::to_string(a.q) + " is not a prime power");
  std::optional<std::vector<std::int64_t>> modulus;
  if (!a.modulus.empty()) modulus = read_json_arg(a.modulus).get<std::vector<std::int64_t>>();
  const FieldCtx k = FieldCtx::create(pp->first, pp->second, modulus);
  const FourthRoots roots = fourth_roots(k);
  std::vector<FieldElem> es{roots.e_list.front()}, fs{roots.f_list.front()};
  if (a.all) {
    es = roots.e_list;
    fs = roots.f_list;
  }
  if (!a.e.empty()) es = {field_elem_from_json(k, read_json_arg(a.e))};
  if (!a.f.empty()) fs = {field_elem_from_json(k, read_json_arg(a.f))};

  Json certs = Json::array();
  for (const auto& e : es)
    for (const auto& f : fs) certs.push_back(rds_to_json(construct_theorem22(k, e, f)));
  emit(out, a.all ? certs : certs.front());
  return kExitConfirmed;
}

struct VerifyArgs {
  std::string cert;
  std::string method = "brute";
  unsigned threads = 1;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const RdsInstance inst = rds_from_json(read_json_file(a.cert));
  Json j;
  j["group"] = inst.group.name();
  j["params"] = params_to_json(inst.params);
  j["method"] = a.method;
  bool valid = true;
  if (a.method == "brute" || a.method == "both") {
    const BruteVerdict v = verify_rds_bruteforce(inst, a.threads);
    j["brute"] = brute_to_json(inst.group, v);
    valid = valid && v.valid;
    if (std::holds_alternative<QuarticSpec>(inst.group.spec())) j["components"] = quartic_component_check(inst).ok;
  }
  if (a.method == "char" || a.method == "both") {
    if (inst.group.is_abelian_spec()) {
      const CharVerdict v = verify_rds_characters(inst);
      j["char"] = char_verdict_to_json(v);
      valid = valid && v.valid;
    } else if (a.method == "char") {
      throw Error(Errc::NotAbelian, "the character method needs an abelian group");
    } else {
      j["char"] = nullptr;
    }
  }
  j["valid"] = valid;
  emit(out, j);
  return valid ? kExitConfirmed : kExitRefuted;
}

struct SearchArgs {
  std::string group, n_gens, expect;
  std::int64_t n = 0;
  std::int64_t lambda = 0;
  bool all_n = false;
  std::uint64_t limit = 0;
  unsigned threads = 1;
  bool no_normalize = false, no_prune = false, force = false, timing = false;
};

int run_search(const SearchArgs& a, std::ostream& out) {
  const Group g(spec_from_json(read_json_arg(a.group)));
  SearchOptions opt;
  opt.normalize = !a.no_normalize;
  opt.prune = !a.no_prune;
  opt.limit = a.limit;
  opt.threads = a.threads;
  opt.force = a.force;

  std::vector<std::vector<GroupElem>> ns;
  if (a.all_n) {
    if (!is_prime(a.n)) throw Error(Errc::InvalidArgument, "--all-N needs a prime --n");
    for (const auto& s : subgroups_of_prime_order(g, a.n)) ns.push_back(s.gens);
  } else {
    if (a.n_gens.empty()) throw Error(Errc::InvalidArgument, "give --n-gens or --all-N with --n");
    ns.push_back(elems_from_json(g, read_json_arg(a.n_gens)));
  }

  std::uint64_t total = 0;
  Json cases = Json::array();
  for (const auto& gens : ns) {
    const SearchTask task{g, gens, a.lambda, opt};
    const SearchResult r = search_transversal_rds(task);
    total += r.solutions.size();
    cases.push_back(search_to_json(task, r, a.timing));
  }
  emit(out, a.all_n ? Json{{"cases", cases}} : cases.front());
  if (a.expect == "empty") return total == 0 ? kExitConfirmed : kExitRefuted;
  if (a.expect == "nonempty") return total > 0 ? kExitConfirmed : kExitRefuted;
  return kExitConfirmed;
}

struct SweepArgs {
  std::string family;
  std::int64_t p = 0;
  unsigned threads = 1;
};

int run_sweep(const SweepArgs& a, std::ostream& out) {
  const SweepReport r = nonexistence_sweep(a.family == "2p2" ? Family::TwoP2 : Family::FourP2, a.p, a.threads);
  emit(out, sweep_to_json(r));
  return r.confirmed ? kExitConfirmed : kExitRefuted;
}

struct MubArgs {
  std::string cert, float_out;
  bool verify = false;
  unsigned threads = 1;
};

int run_mub(const MubArgs& a, std::ostream& out) {
  const MubFamily fam = mub_from_abelian_rds(rds_from_json(read_json_file(a.cert)));
  if (!a.float_out.empty()) write_json_file(a.float_out, mub_float_to_json(fam));
  if (!a.verify) {
    emit(out, mub_to_json(fam));
    return kExitConfirmed;
  }
  const MubVerdict v = verify_mub_exact(fam, a.threads);
  emit(out, Json{{"mub", mub_to_json(fam)}, {"verification", mub_verdict_to_json(v)}});
  return v.valid ? kExitConfirmed : kExitRefuted;
}

struct BentArgs {
  std::int64_t p = 0;
  std::string table;
  bool verify_hou = false, force = false;
  unsigned threads = 1;
};

int run_bent(const BentArgs& a, std::ostream& out) {
  if (a.verify_hou) {
    const HouResult r = verify_hou(a.p, a.force, a.threads);
    emit(out, hou_to_json(a.p, r));
    return r.confirmed ? kExitConfirmed : kExitRefuted;
  }
  std::vector<std::int64_t> table;
  if (a.table.empty()) {
    for (std::int64_t x = 0; x < a.p; ++x) table.push_back(x * x);
  } else {
    table = read_json_arg(a.table).get<std::vector<std::int64_t>>();
  }
  const PFunction f = PFunction::make(a.p, table);
  Json mods = Json::array();
  for (std::int64_t b = 0; b < f.p; ++b) {
    const auto m = modulus_squared(fourier_hat(f, b));
    mods.push_back(m ? bigint_to_json(*m) : Json(nullptr));
  }
  const bool bent = is_bent(f);
  const int degree = poly_degree(f);
  emit(out, Json{{"function", pfunction_to_json(f)}, {"degree", degree}, {"bent", bent}, {"modulus_squared", mods}});
  return bent == (degree == 2) ? kExitConfirmed : kExitRefuted;
}

int run_lemma31(std::int64_t p, std::ostream& out) {
  if (!is_prime(p) || p == 2) throw Error(Errc::NotPrime, "p must be an odd prime");
  const auto sols = lemma31_solutions(p);
  bool matches = p == 7 ? !sols.empty() : sols.empty();
  for (const auto& a : sols) matches = matches && fits_lemma31_template(a);
  emit(out, Json{{"p", p}, {"count", sols.size()}, {"solutions", sols}, {"matches_lemma", matches}});
  return matches ? kExitConfirmed : kExitRefuted;
}

struct Lemma14Args {
  std::string group, n;
  std::int64_t m = 0;
};

int run_lemma14(const Lemma14Args& a, std::ostream& out) {
  const Group g(spec_from_json(read_json_arg(a.group)));
  const Subgroup n = make_subgroup(g, elems_from_json(g, read_json_arg(a.n)));
  const auto n_order = static_cast<std::int64_t>(n.order());
  const std::int64_t m = a.m != 0 ? a.m : static_cast<std::int64_t>(g.order()) / n_order;
  const Lemma14Verdict v = lemma14_necessary(g, n, m, n_order);
  emit(out, Json{{"group", g.name()}, {"N", elems_to_json(g, n.gens)}, {"m", m}, {"n", n_order}, {"verdict", lemma14_to_json(v)}});
  return v.pass ? kExitConfirmed : kExitRefuted;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-regular relative difference sets: construction, search, exact verification"};
  app.name("semirds");
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "(4q, q, 4q, 4) RDS in (K x K) x| Z_4 as a certificate");
  construct->add_option("--q", ca.q, "field order, a prime power = 1 mod 4, > 9")->required();
  construct->add_option("--e", ca.e, "e with e^4 = 1 (integer or coordinate array)");
  construct->add_option("--f", ca.f, "f with f^2 = -1 (integer or coordinate array)");
  construct->add_option("--modulus", ca.modulus, "field modulus, low degree first");
  construct->add_flag("--all", ca.all, "every admissible (e, f) pair, as an array");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "verify a certificate");
  verify->add_option("--cert", va.cert, "certificate file")->required();
  verify->add_option("--method", va.method, "brute, char or both")->check(CLI::IsMember({"brute", "char", "both"}));
  verify->add_option("--threads", va.threads)->check(CLI::Range(1U, 256U));

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "search transversal RDS relative to N");
  search->add_option("--group", sa.group, "group JSON (inline or file)")->required();
  search->add_option("--n-gens", sa.n_gens, "generators of N as a JSON element array");
  search->add_option("--n", sa.n, "prime order of N for --all-N");
  search->add_option("--lambda", sa.lambda)->required();
  search->add_flag("--all-N", sa.all_n, "every subgroup of order --n");
  search->add_option("--limit", sa.limit, "maximum solutions per N, 0 = all");
  search->add_option("--threads", sa.threads)->check(CLI::Range(1U, 256U));
  search->add_flag("--no-normalize", sa.no_normalize);
  search->add_flag("--no-prune", sa.no_prune);
  search->add_flag("--force", sa.force, "skip the branching-bound guard");
  search->add_flag("--timing", sa.timing, "include wall time");
  search->add_option("--expect", sa.expect, "exit 1 unless the result is empty/nonempty")
      ->check(CLI::IsMember({"empty", "nonempty"}));

  SweepArgs wa;
  auto* sweep = app.add_subcommand("sweep", "nonexistence sweep over groups of order 2p^2 or 4p^2");
  sweep->add_option("--family", wa.family)->required()->check(CLI::IsMember({"2p2", "4p2"}));
  sweep->add_option("--p", wa.p)->required();
  sweep->add_option("--threads", wa.threads)->check(CLI::Range(1U, 256U));

  MubArgs ma;
  auto* mub = app.add_subcommand("mub", "mutually unbiased bases from an abelian certificate");
  mub->add_option("--cert", ma.cert)->required();
  mub->add_flag("--verify", ma.verify, "exact verification");
  mub->add_option("--float-out", ma.float_out, "write normalized complex entries");
  mub->add_option("--threads", ma.threads)->check(CLI::Range(1U, 256U));

  BentArgs ba;
  auto* bent = app.add_subcommand("bent", "p-ary bent functions on Z_p");
  bent->add_option("--p", ba.p)->required();
  bent->add_option("--table", ba.table, "f(0..p-1) as a JSON array (default x^2)");
  bent->add_flag("--verify-hou", ba.verify_hou, "check bent <=> degree 2 over all p^p functions");
  bent->add_flag("--force", ba.force, "admit p = 7");
  bent->add_option("--threads", ba.threads)->check(CLI::Range(1U, 256U));

  std::int64_t lemma31_p = 0;
  auto* lemma31 = app.add_subcommand("lemma31", "nonnegative a_i summing to p with |sum a_i xi^i|^2 = 2p");
  lemma31->add_option("--p", lemma31_p)->required();

  Lemma14Args la;
  auto* lemma14 = app.add_subcommand("check-lemma14", "exponent condition on C_G(N)");
  lemma14->add_option("--group", la.group)->required();
  lemma14->add_option("--n,--n-gens", la.n, "generators of N")->required();
  lemma14->add_option("--m", la.m, "defaults to |G| / |N|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*construct) return run_construct(ca, out);
    if (*verify) return run_verify(va, out);
    if (*search) return run_search(sa, out);
    if (*sweep) return run_sweep(wa, out);
    if (*mub) return run_mub(ma, out);
    if (*bent) return run_bent(ba, out);
    if (*lemma31) return run_lemma31(lemma31_p, out);
    if (*lemma14) return run_lemma14(la, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::ScaleGuard ? kExitUsage : kExitRefuted;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitRefuted;
  }
  return kExitUsage;
}

}  // namespace semirds
