#include <doctest.h>

#include <algorithm>
#include <set>

#include "semirds/error.hpp"
#include "semirds/search.hpp"

using namespace semirds;

namespace {

// brute oracle: every transversal of the right cosets, checked by definition
std::uint64_t count_by_definition(const Group& g, const ElemSet& n, std::int64_t lambda, bool normalize) {
  const auto cs = cosets(g, n, CosetSide::Right);
  std::vector<std::size_t> idx(cs.size(), 0);
  std::uint64_t found = 0;
  while (true) {
    std::vector<GroupElem> r;
    for (std::size_t i = 0; i < cs.size(); ++i) r.push_back(cs[i][idx[i]]);
    if (!normalize || r[0] == g.identity()) {
      std::vector<std::int64_t> cnt(g.order(), 0);
      for (const auto a : r)
        for (const auto b : r) ++cnt[g.mul(a, g.inv(b)).id];
      bool ok = true;
      for (std::uint32_t x = 1; x < g.order() && ok; ++x) {
        const bool in_n = std::binary_search(n.begin(), n.end(), GroupElem{x});
        ok = cnt[x] == (in_n ? 0 : lambda);
      }
      if (ok) ++found;
    }
    std::size_t i = 0;
    while (i < cs.size() && ++idx[i] == cs[i].size()) idx[i++] = 0;
    if (i == cs.size()) break;
  }
  return found;
}

}  // namespace

TEST_CASE("order 18: pruning agrees with brute force and finds nothing") {
  for (const auto& spec : family_groups(Family::TwoP2, 3)) {
    const Group g(spec);
    for (const auto& n : subgroups_of_prime_order(g, 3)) {
      SearchTask task{g, n.gens, 2, {}};
      const SearchResult pruned = search_transversal_rds(task);
      task.options.prune = false;
      const SearchResult full = search_transversal_rds(task);
      CHECK(pruned.solutions == full.solutions);
      CHECK(pruned.nodes <= full.nodes);
      CHECK(pruned.solutions.empty());
      CHECK(count_by_definition(g, n.elements, 2, true) == 0);
    }
  }
}

TEST_CASE("quadratic RDS is found; counts match the definition") {
  for (std::int64_t p : {3, 5}) {
    const Group g(AbelianSpec{{p, p}});
    const std::vector<GroupElem> gens{g.from_coords(std::vector<std::int64_t>{0, 1})};
    SearchTask task{g, gens, 1, {}};
    const SearchResult r = search_transversal_rds(task);
    const ElemSet n = subgroup_closure(g, gens);
    CHECK(r.solutions.size() == count_by_definition(g, n, 1, true));
    CHECK(!r.solutions.empty());
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
      const RdsInstance inst = to_instance(task, r, i);
      CHECK(verify_rds_bruteforce(inst).valid);
      CHECK(verify_rds_characters(inst).valid);
    }
    task.options.prune = false;
    CHECK(search_transversal_rds(task).solutions == r.solutions);
    task.options.normalize = false;
    CHECK(search_transversal_rds(task).solutions.size() == r.solutions.size() * static_cast<std::size_t>(p));
  }
}

TEST_CASE("Z2^2 x Z3^2 contains (12,3,12,4) RDS") {
  const Group g(AbelianSpec{{2, 2, 3, 3}});
  const auto subs = subgroups_of_prime_order(g, 3);
  CHECK(subs.size() == 4);
  SearchTask task{g, subs.front().gens, 4, {}};
  const SearchResult r = search_transversal_rds(task);
  REQUIRE(!r.solutions.empty());
  CHECK(r.params == RdsParams{12, 3, 12, 4});
  for (std::size_t i = 0; i < r.solutions.size(); ++i) {
    const RdsInstance inst = to_instance(task, r, i);
    CHECK(verify_rds_bruteforce(inst).valid);
    CHECK(verify_rds_characters(inst).valid);
  }
  SearchTask all = task;
  all.options.normalize = false;
  const SearchResult u = search_transversal_rds(all);
  CHECK(u.solutions.size() == r.solutions.size() * 3);

  // determinism across worker counts, with and without a limit
  for (unsigned t : {2U, 3U, 5U}) {
    SearchTask par = task;
    par.options.threads = t;
    const SearchResult pr = search_transversal_rds(par);
    CHECK(pr.solutions == r.solutions);
    CHECK(pr.nodes == r.nodes);
    par.options.limit = 2;
    SearchTask seq = task;
    seq.options.limit = 2;
    const SearchResult a = search_transversal_rds(par), b = search_transversal_rds(seq);
    CHECK(a.solutions == b.solutions);
    CHECK(a.nodes == b.nodes);
    CHECK(a.solutions.size() == 2);
    CHECK(std::equal(a.solutions.begin(), a.solutions.end(), r.solutions.begin()));
  }
}

TEST_CASE("abelian groups of order 36 without (12,3,12,4) RDS") {
  for (const auto& factors : {std::vector<std::int64_t>{4, 9}, {4, 3, 3}, {2, 2, 9}}) {
    const Group g(AbelianSpec{factors});
    for (const auto& n : subgroups_of_prime_order(g, 3)) {
      SearchTask task{g, n.gens, 4, {}};
      CHECK(search_transversal_rds(task).solutions.empty());
    }
  }
}

TEST_CASE("sweeps") {
  const SweepReport two = nonexistence_sweep(Family::TwoP2, 3);
  CHECK(two.confirmed);
  CHECK(two.params == RdsParams{6, 3, 6, 2});
  std::set<std::string> groups;
  bool closed_by_lemma = false;
  for (const auto& c : two.cases) {
    groups.insert(c.group);
    CHECK(c.count == 0);
    if (!c.searched) closed_by_lemma = true;
  }
  CHECK(groups.size() == 5);
  CHECK(closed_by_lemma);
  // cyclic Sylow 3-subgroup: the unique N is closed without search
  for (const auto& c : two.cases) {
    if (c.group == "Z2xZ9" || c.group.rfind("D9", 0) == 0) {
      CHECK_FALSE(c.searched);
      CHECK(c.lemma14.rfind("fail", 0) == 0);
    }
  }

  const SweepReport four = nonexistence_sweep(Family::FourP2, 3);
  CHECK(four.confirmed);
  for (const auto& c : four.cases) CHECK((c.count > 0) == (c.group == "Z2xZ2xZ3xZ3"));

  CHECK_THROWS_AS(nonexistence_sweep(Family::FourP2, 5), Error);
  CHECK_THROWS_AS(nonexistence_sweep(Family::TwoP2, 7), Error);
}

TEST_CASE("search guards") {
  const Group g(AbelianSpec{{2, 2, 3, 3}});
  const auto n = subgroups_of_prime_order(g, 3).front();
  try {
    search_transversal_rds(SearchTask{g, n.gens, 3, {}});
    FAIL("expected NotSemiRegular");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSemiRegular);
  }
  // 5^19 normalized
  const Group g100(AbelianSpec{{4, 25}});
  const auto n100 = subgroups_of_prime_order(g100, 5).front();
  try {
    search_transversal_rds(SearchTask{g100, n100.gens, 4, {}});
    FAIL("expected ScaleGuard");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ScaleGuard);
  }
}
