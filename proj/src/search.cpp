#include "semirds/search.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "semirds/arith.hpp"
#include "semirds/error.hpp"

namespace semirds {

namespace {

constexpr std::uint32_t kMaxTableOrder = 2048;

class Searcher {
 public:
  Searcher(const SearchTask& task) : task_(task), g_(task.group) {
    const ElemSet n = subgroup_closure(g_, task.n_gens);
    const auto order = static_cast<std::int64_t>(g_.order());
    const auto n_size = static_cast<std::int64_t>(n.size());
    if (task.lambda < 1 || order != task.lambda * n_size * n_size) {
      throw Error(Errc::NotSemiRegular, "|G| = " + std::to_string(order) + " is not lambda n^2 with lambda = " +
                                            std::to_string(task.lambda) + ", n = " + std::to_string(n_size));
    }
    params_ = RdsParams{order / n_size, n_size, order / n_size, task.lambda};
    cosets_ = cosets(g_, n, CosetSide::Right);

    const double depth = static_cast<double>(params_.m - (task.options.normalize ? 1 : 0));
    const double bound = std::pow(static_cast<double>(n_size), depth);
    if (bound > kSearchBound && !task.options.force) {
      throw Error(Errc::ScaleGuard, "branching bound " + std::to_string(n_size) + "^" +
                                        std::to_string(static_cast<std::int64_t>(depth)) + " exceeds 1e10");
    }

    in_n_.assign(g_.order(), 0);
    for (const auto x : n) in_n_[x.id] = 1;
    if (g_.order() <= kMaxTableOrder) {
      std::vector<GroupElem> inv(g_.order());
      for (std::uint32_t s = 0; s < g_.order(); ++s) inv[s] = g_.inv(GroupElem{s});
      table_.resize(static_cast<std::size_t>(g_.order()) * g_.order());
      for (std::uint32_t x = 0; x < g_.order(); ++x) {
        for (std::uint32_t s = 0; s < g_.order(); ++s) {
          table_[static_cast<std::size_t>(x) * g_.order() + s] = g_.mul(GroupElem{x}, inv[s]).id;
        }
      }
    }
  }

  const RdsParams& params() const { return params_; }

  SearchResult run() {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t first = task_.options.normalize ? 1 : 0;
    // one task per choice in the first unfixed coset
    std::vector<std::vector<std::uint32_t>> prefixes;
    std::vector<std::uint32_t> base;
    if (task_.options.normalize) base.push_back(g_.identity().id);
    if (first < cosets_.size()) {
      for (const auto x : cosets_[first]) {
        auto pre = base;
        pre.push_back(x.id);
        prefixes.push_back(std::move(pre));
      }
    } else {
      prefixes.push_back(base);
    }

    std::vector<TaskOut> outs(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < prefixes.size(); i = next++) outs[i] = run_task(prefixes[i]);
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(task_.options.threads, static_cast<unsigned>(prefixes.size())));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    }

    SearchResult result;
    result.params = params_;
    for (auto& out : outs) {
      result.nodes += out.nodes;
      for (auto& s : out.solutions) {
        if (task_.options.limit != 0 && result.solutions.size() >= task_.options.limit) break;
        result.solutions.push_back(std::move(s));
      }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

 private:
  struct TaskOut {
    std::vector<std::vector<GroupElem>> solutions;
    std::uint64_t nodes = 0;
  };

  struct State {
    std::vector<std::uint32_t> chosen;
    std::vector<std::int32_t> count;
    std::vector<std::uint32_t> log;
    TaskOut out;
  };

  std::uint32_t diff(std::uint32_t x, std::uint32_t s) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(x) * g_.order() + s];
    return g_.mul(GroupElem{x}, g_.inv(GroupElem{s})).id;
  }

  // Adds x to the partial set; false (with the counts rolled back) if a
  // pruning bound is hit.
  bool place(State& st, std::uint32_t x) const {
    const std::size_t mark = st.log.size();
    bool ok = true;
    for (const auto s : st.chosen) {
      for (const auto d : {diff(x, s), diff(s, x)}) {
        st.log.push_back(d);
        const auto c = ++st.count[d];
        if (task_.options.prune && (in_n_[d] != 0 || c > task_.lambda)) ok = false;
      }
      if (!ok) break;
    }
    if (!ok) {
      rollback(st, mark);
      return false;
    }
    st.chosen.push_back(x);
    return true;
  }

  static void rollback(State& st, std::size_t mark) {
    while (st.log.size() > mark) {
      --st.count[st.log.back()];
      st.log.pop_back();
    }
  }

  bool complete(const State& st) const {
    for (std::uint32_t x = 1; x < g_.order(); ++x) {
      const std::int64_t expected = in_n_[x] != 0 ? 0 : task_.lambda;
      if (st.count[x] != expected) return false;
    }
    return true;
  }

  bool full(const State& st) const {
    return task_.options.limit != 0 && st.out.solutions.size() >= task_.options.limit;
  }

  void dfs(State& st) const {
    const std::size_t depth = st.chosen.size();
    if (depth == cosets_.size()) {
      if (complete(st)) {
        std::vector<GroupElem> r;
        r.reserve(depth);
        for (const auto x : st.chosen) r.push_back(GroupElem{x});
        st.out.solutions.push_back(std::move(r));
      }
      return;
    }
    for (const auto x : cosets_[depth]) {
      ++st.out.nodes;
      const std::size_t mark = st.log.size();
      if (!place(st, x.id)) continue;
      dfs(st);
      st.chosen.pop_back();
      rollback(st, mark);
      if (full(st)) return;
    }
  }

  TaskOut run_task(const std::vector<std::uint32_t>& prefix) const {
    State st;
    st.count.assign(g_.order(), 0);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (i + 1 == prefix.size()) ++st.out.nodes;
      if (!place(st, prefix[i])) return std::move(st.out);
    }
    dfs(st);
    return std::move(st.out);
  }

  const SearchTask& task_;
  const Group& g_;
  RdsParams params_;
  std::vector<ElemSet> cosets_;
  std::vector<std::uint8_t> in_n_;
  std::vector<std::uint32_t> table_;
};

}  // namespace

SearchResult search_transversal_rds(const SearchTask& task) { return Searcher(task).run(); }

RdsInstance to_instance(const SearchTask& task, const SearchResult& result, std::size_t index) {
  if (index >= result.solutions.size()) throw Error(Errc::InvalidArgument, "no solution at index " + std::to_string(index));
  return RdsInstance{task.group, task.n_gens, result.solutions[index], result.params};
}

std::vector<GroupSpec> family_groups(Family family, std::int64_t p) {
  if (!is_prime(p) || p == 2) throw Error(Errc::NotPrime, "p must be an odd prime");
  if (family == Family::TwoP2) {
    if (p > 5) throw Error(Errc::ScaleGuard, "the 2p^2 sweep admits p in {3, 5}");
    return {AbelianSpec{{2, p * p}}, DihedralSpec{p * p}, SemidirectSpec{p, -1, -1}, SemidirectSpec{p, -1, 1},
            SemidirectSpec{p, 1, 1}};
  }
  if (p != 3) throw Error(Errc::ScaleGuard, "the 4p^2 sweep admits p = 3 only");
  return {AbelianSpec{{4, 9}}, AbelianSpec{{2, 2, 9}}, AbelianSpec{{4, 3, 3}}, AbelianSpec{{2, 2, 3, 3}}};
}

SweepReport nonexistence_sweep(Family family, std::int64_t p, unsigned threads) {
  const auto specs = family_groups(family, p);
  SweepReport report;
  report.family = family;
  report.p = p;
  const std::int64_t lambda = family == Family::TwoP2 ? 2 : 4;
  report.params = RdsParams{lambda * p, p, lambda * p, lambda};
  report.confirmed = true;

  for (const auto& spec : specs) {
    const Group g(spec);
    bool any = false;
    for (const auto& n : subgroups_of_prime_order(g, p)) {
      SweepCase c;
      c.group = g.name();
      c.spec = spec;
      c.n_gens = n.gens;
      c.normal = n.normal;
      if (n.normal) {
        const Lemma14Verdict v = lemma14_necessary(g, n, report.params.m, p);
        c.lemma14 = (v.pass ? "pass: " : "fail: ") + v.reason;
        if (!v.pass) {
          report.cases.push_back(std::move(c));
          continue;
        }
      }
      SearchTask task{g, n.gens, lambda, SearchOptions{}};
      task.options.threads = threads;
      const SearchResult r = search_transversal_rds(task);
      c.searched = true;
      c.count = r.solutions.size();
      c.nodes = r.nodes;
      if (!r.solutions.empty()) c.example = r.solutions.front();
      any = any || c.count > 0;
      report.cases.push_back(std::move(c));
    }
    const bool expect_some = family == Family::FourP2 && std::holds_alternative<AbelianSpec>(spec) &&
                             std::get<AbelianSpec>(spec).factors == std::vector<std::int64_t>{2, 2, 3, 3};
    if (any != expect_some) report.confirmed = false;
    if (expect_some) {
      for (const auto& c : report.cases)
        if (c.group == g.name() && c.count == 0) report.confirmed = false;
    }
  }
  return report;
}

}  // namespace semirds
