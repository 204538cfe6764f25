#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kwise/family.hpp"
#include "kwise/intersecting.hpp"

namespace kwise {

inline constexpr int kSearchLimit = 7;

struct SearchConfig {
  int n = 0;
  int k = 3;
  KwiseMode mode = KwiseMode::Distinct;
  double budget_seconds = 60.0;
  bool symmetry = true;
  bool enumerate_all = false;  // every minimum witness up to isomorphism
  // Only families with at least k members. Below k members a family can be
  // maximal for vacuous reasons (e.g. {emptyset, [n]} for k = 3), which fixes
  // the unrestricted minimum at k-1 (Distinct) or 1 (WithRepetition).
  bool nondegenerate = false;
};

struct SearchWitness {
  SetFamily family;  // canonical form
  bool matches_linked_cubes = false;
};

struct SearchReport {
  std::optional<std::int64_t> f_value;  // none when no maximal family exists in the regime
  std::vector<SearchWitness> witnesses;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  bool optimal = true;
  // When the budget runs out, f lies in [lower_bound, upper_bound].
  std::int64_t lower_bound = 0;
  std::optional<std::int64_t> upper_bound;
};

/// Exact minimum size of a maximal k-wise intersecting family on [n], n <= 7.
/// Families with fewer than k members are scanned directly; larger maximal
/// families are up-sets and are found by branch and bound over up-sets
/// (branching on the least undecided mask, exclusion first) with pruning on
/// k-wise violations, incumbent size, maximality feasibility and, optionally,
/// lex-leader symmetry. Every reported witness passes is_maximal_k_wise.
[[nodiscard]] SearchReport search_min(const SearchConfig& config);

/// Visits every maximal k-wise intersecting family with at least k members
/// (all of them up-sets), n <= 6. Return false from the callback to stop.
void for_each_maximal_upset(int n, int k, KwiseMode mode,
                            const std::function<bool(const SetFamily&)>& visit);

/// Lower bound on the size s of a maximal k-wise intersecting family with at
/// least k members: every non-member is a disjoint union of at most k-1
/// complements of members, so 2^n - s <= sum_{j=1}^{k-1} C(s, j).
[[nodiscard]] std::int64_t counting_lower_bound(int n, int k);

}  // namespace kwise
