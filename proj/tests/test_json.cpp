#include <doctest.h>

#include "semirds/error.hpp"
#include "semirds/json_io.hpp"

using namespace semirds;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("scalar encodings round-trip") {
  const BigInt big("123456789012345678901234567890");
  CHECK(bigint_from_json(bigint_to_json(big)) == big);
  CHECK(bigint_to_json(BigInt(-7)) == Json(-7));

  const auto k = FieldCtx::create(5, 2);
  CHECK(field_to_json(k).dump() == R"({"p":5,"n":2,"modulus":[1,1,1]})");
  CHECK(field_from_json(field_to_json(k)) == k);
  for (const auto& x : k.elements()) CHECK(field_elem_from_json(k, field_elem_to_json(x)) == x);
  CHECK(field_elem_from_json(FieldCtx::create(13, 1), Json(18)) == FieldCtx::create(13, 1).from_int(5));

  const CycInt d = delta(7) * BigInt(big);
  CHECK(cycint_from_json(cycint_to_json(d)) == d);
  CHECK(cycint_to_json(d) == cycint_to_json(cycint_from_json(cycint_to_json(d))));
}

TEST_CASE("group specs and elements round-trip") {
  const auto f13 = FieldCtx::create(13, 1);
  const auto f9 = FieldCtx::create(3, 2);
  const auto r9 = fourth_roots(f9);
  for (const GroupSpec& spec : std::vector<GroupSpec>{AbelianSpec{{2, 2, 3, 3}}, SemidirectSpec{5, -1, 1}, DihedralSpec{9},
                                                       QuarticSpec{f13, f13.one(), f13.from_int(5)},
                                                       QuarticSpec{f9, r9.e_list[1], r9.f_list[0]}}) {
    const Json j = spec_to_json(spec);
    CHECK(spec_to_json(spec_from_json(j)) == j);
    const Group g(spec);
    for (const auto x : g.elements()) CHECK(elem_from_json(g, elem_to_json(g, x)) == x);
  }
  const Group g(AbelianSpec{{4, 9}});
  CHECK(code_of([&] { elem_from_json(g, Json::parse("[4, 0]")); }) == Errc::ParseError);
  CHECK(code_of([&] { elem_from_json(g, Json::parse("[1]")); }) == Errc::ParseError);
  CHECK(code_of([&] { spec_from_json(Json::parse(R"({"kind":"cyclic"})")); }) == Errc::ParseError);
  CHECK(code_of([&] { spec_from_json(Json::parse(R"({"factors":[2]})")); }) == Errc::ParseError);
}

TEST_CASE("certificates, verdicts and reports round-trip") {
  const auto k = FieldCtx::create(13, 1);
  const RdsInstance inst = construct_theorem22(k, k.one(), k.from_int(5));
  const Json cert = rds_to_json(inst);
  const RdsInstance back = rds_from_json(cert);
  CHECK(back.r == inst.r);
  CHECK(back.n_gens == inst.n_gens);
  CHECK(back.params == inst.params);
  CHECK(rds_to_json(back) == cert);
  CHECK(verify_rds_bruteforce(back).valid);

  RdsInstance broken = inst;
  broken.r[0] = broken.group.mul(broken.r[0], broken.n_gens[0]);
  const BruteVerdict bv = verify_rds_bruteforce(broken);
  CHECK(brute_to_json(inst.group, brute_from_json(inst.group, brute_to_json(inst.group, bv))) == brute_to_json(inst.group, bv));

  RdsInstance q = quadratic_rds(5);
  q.r[1] = q.group.from_coords(std::vector<std::int64_t>{2, 2});
  const CharVerdict cv = verify_rds_characters(q);
  CHECK_FALSE(cv.valid);
  CHECK(char_verdict_to_json(char_verdict_from_json(char_verdict_to_json(cv))) == char_verdict_to_json(cv));

  const MubFamily fam = mub_from_abelian_rds(quadratic_rds(5));
  const Json jm = mub_to_json(fam);
  CHECK(mub_to_json(mub_from_json(jm)) == jm);
  CHECK(verify_mub_exact(mub_from_json(jm)).valid);
  const MubVerdict mv = verify_mub_exact(fam);
  CHECK(mub_verdict_to_json(mub_verdict_from_json(mub_verdict_to_json(mv))) == mub_verdict_to_json(mv));
  CHECK(mub_float_to_json(fam).size() == 6);

  const HouResult h = verify_hou(3);
  CHECK(hou_to_json(3, hou_from_json(hou_to_json(3, h))) == hou_to_json(3, h));
  const PFunction f = PFunction::make(5, {1, 2, 3, 4, 0});
  CHECK(pfunction_from_json(pfunction_to_json(f)) == f);
  CHECK(code_of([&] { pfunction_from_json(Json::parse(R"({"p":5,"table":[1,2]})")); }) == Errc::InvalidArgument);

  const Group g(AbelianSpec{{2, 2, 3, 3}});
  SearchTask task{g, subgroups_of_prime_order(g, 3).front().gens, 4, {}};
  task.options.limit = 3;
  const SearchResult sr = search_transversal_rds(task);
  const Json js = search_to_json(task, sr);
  SearchTask parsed_task{Group(AbelianSpec{{2}}), {}, 0, {}};
  const SearchResult sr2 = search_from_json(js, &parsed_task);
  CHECK(sr2.solutions == sr.solutions);
  CHECK(search_to_json(parsed_task, sr2) == js);
  CHECK_FALSE(js.contains("seconds"));
  CHECK(search_to_json(task, sr, true).contains("seconds"));

  const SweepReport sw = nonexistence_sweep(Family::TwoP2, 3);
  const Json jw = sweep_to_json(sw);
  CHECK(sweep_to_json(sweep_from_json(jw)) == jw);

  const Lemma14Verdict lv{false, 18, "exp"};
  CHECK(lemma14_to_json(lemma14_from_json(lemma14_to_json(lv))) == lemma14_to_json(lv));
}
