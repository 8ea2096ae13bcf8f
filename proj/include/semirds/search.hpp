#pragma once

// Backtracking search for semi-regular RDS as transversals of the right
// cosets of N, and the order-2p^2 / 4p^2 sweeps built on it.

#include <cstdint>
#include <string>
#include <vector>

#include "semirds/groups.hpp"
#include "semirds/rds.hpp"

namespace semirds {

struct SearchOptions {
  bool normalize = true;    // fix the representative of the coset N to the identity
  std::uint64_t limit = 0;  // 0 = all solutions
  unsigned threads = 1;
  bool prune = true;   // off: only complete transversals are checked
  bool force = false;  // skip the branching-bound guard
};

struct SearchTask {
  Group group;
  std::vector<GroupElem> n_gens;
  std::int64_t lambda = 0;
  SearchOptions options;
};

struct SearchResult {
  RdsParams params;
  std::vector<std::vector<GroupElem>> solutions;  // R in coset order
  std::uint64_t nodes = 0;  // elements placed, including pruned placements
  double seconds = 0;
};

/// Largest admitted branching bound n^(m-1) (normalized) or n^m.
inline constexpr double kSearchBound = 1e10;

/// Depth-first over the right cosets of N sorted by minimal element.
/// Throws NotSemiRegular if |G| != lambda n^2, ScaleGuard past kSearchBound.
SearchResult search_transversal_rds(const SearchTask& task);

RdsInstance to_instance(const SearchTask& task, const SearchResult& result, std::size_t index);

enum class Family { TwoP2, FourP2 };

struct SweepCase {
  std::string group;
  GroupSpec spec;
  std::vector<GroupElem> n_gens;
  bool normal = false;
  bool searched = false;            // false when Lemma 1.4 closed the case
  std::string lemma14;              // verdict text when N is normal
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  std::vector<GroupElem> example;  // first solution, if any
};

struct SweepReport {
  Family family = Family::TwoP2;
  std::int64_t p = 3;
  RdsParams params;
  std::vector<SweepCase> cases;
  bool confirmed = false;  // matches the expected existence pattern
};

/// Groups of order 2p^2 (p in {3, 5}): Z2 x Z_{p^2}, D_{p^2}, G1, G2, G3.
/// Abelian groups of order 4p^2 (p = 3): [4,9], [2,2,9], [4,3,3], [2,2,3,3].
std::vector<GroupSpec> family_groups(Family family, std::int64_t p);

/// Every order-p subgroup N of every group in the family; N normal goes
/// through Lemma 1.4 first. Throws ScaleGuard outside the admitted p.
SweepReport nonexistence_sweep(Family family, std::int64_t p, unsigned threads = 1);

}  // namespace semirds
