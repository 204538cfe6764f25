#include "kwise/cube_audit.hpp"

#include <algorithm>
#include <string>

#include "kwise/constructions.hpp"
#include "kwise/error.hpp"
#include "kwise/intersecting.hpp"

namespace kwise {

int h_value(Mask b, Mask c, Mask s, int n) {
  const Mask sc = complement(s, n);
  const int straight = cardinality(b & ~s) + cardinality(c & ~sc);
  const int crossed = cardinality(b & ~sc) + cardinality(c & ~s);
  return std::min(straight, crossed);
}

std::optional<std::pair<Mask, Mask>> decompose_min_h(const SetFamily& family, Mask a, Mask s) {
  const int n = family.ground_size();
  std::optional<std::pair<Mask, Mask>> best;
  int best_h = 0;
  // Every split of A: b runs over submasks, c = a ^ b; each unordered pair
  // is seen twice, once with b < c.
  for (Mask b = a;; b = (b - 1) & a) {
    const Mask c = a ^ b;
    if (b < c && family.contains(b) && family.contains(c)) {
      const int h = h_value(b, c, s, n);
      const std::pair<Mask, Mask> candidate{b, c};
      if (!best || h < best_h || (h == best_h && candidate < *best)) {
        best = candidate;
        best_h = h;
      }
    }
    if (b == 0) break;
  }
  return best;
}

CubeParts partition_relative_to_cubes(const SetFamily& g, Mask s) {
  const int n = g.ground_size();
  const Mask sc = complement(s, n);
  CubeParts parts{SetFamily(n), SetFamily(n), SetFamily(n)};
  g.for_each([&](Mask m) {
    if (m != 0 && m != s && is_subset(m, s)) parts.g1.insert(m);
    if (m != 0 && m != sc && is_subset(m, sc)) parts.g2.insert(m);
    if (!is_subset(m, s) && !is_subset(m, sc)) parts.g3.insert(m);
  });
  return parts;
}

ClaimAudit audit_claim_counts(const SetFamily& family, Mask s, const Rational& eps) {
  const int n = family.ground_size();
  require(n % 2 == 1, ErrorKind::InvalidParameter, "claim audit needs odd n, got " + std::to_string(n));
  require(s <= full_mask(n), ErrorKind::InvalidParameter, "S is not a subset of [n]");
  require(eps >= Rational{0}, ErrorKind::InvalidParameter, "eps must be non-negative");
  const int ell = (n - 1) / 2;
  const std::int64_t p = std::int64_t{1} << ell;
  const Mask sc = complement(s, n);

  ClaimAudit r;
  r.ell = ell;
  r.eps = eps;
  r.family_size = static_cast<std::int64_t>(family.size());

  const SetFamily g = complement_family(family);
  const SetFamily f0 = pair_of_cubes(n, s);
  const CubeParts parts = partition_relative_to_cubes(g, s);
  r.g1 = static_cast<std::int64_t>(parts.g1.size());
  r.g2 = static_cast<std::int64_t>(parts.g2.size());
  r.g3 = static_cast<std::int64_t>(parts.g3.size());

  r.s_has_size_ell = cardinality(s) == ell;
  r.maximal_3wise = is_k_wise_intersecting(family, 3, KwiseMode::Distinct) &&
                    is_maximal_k_wise(family, 3, KwiseMode::Distinct);
  r.empty_in_g = g.contains(0);
  r.s_not_in_g = !g.contains(s);
  r.sc_not_in_g = !g.contains(sc);
  r.g_delta_f0 = static_cast<std::int64_t>(symmetric_difference_count(g, f0));
  const Rational eps_scaled = eps * Rational{p};
  r.delta_within_eps = Rational{r.g_delta_f0} <= eps_scaled;
  r.size_at_most_extremal = r.family_size <= 3 * p - 3;
  r.hypotheses_met = r.s_has_size_ell && r.maximal_3wise && r.empty_in_g && r.s_not_in_g && r.sc_not_in_g &&
                     r.delta_within_eps && r.size_at_most_extremal;

  const std::int64_t universe = std::int64_t{1} << n;
  r.uncovered_count = universe - static_cast<std::int64_t>(family_union(family, f0).size());
  r.injection_bound = Rational{r.g1 * r.g2} + Rational{r.g3} * eps_scaled;
  r.injection_holds = Rational{r.uncovered_count} <= r.injection_bound;

  r.cube_bound = (p - 2) * (2 * p - 2);
  r.cube_bound_holds = r.injection_bound <= Rational{r.cube_bound};
  r.cube_bound_tight = r.injection_bound == Rational{r.cube_bound};
  r.g3_empty = r.g3 == 0;
  r.iff_applicable = static_cast<std::int64_t>(g.size()) == 3 * p - 3;
  r.iff_consistent = r.cube_bound_tight == r.g3_empty;

  r.chain_lower = universe - (3 * p - 1) - r.family_size;
  r.chain_upper = r.cube_bound;
  r.chain_holds = r.chain_lower <= r.uncovered_count && Rational{r.uncovered_count} <= r.injection_bound &&
                  r.cube_bound_holds;
  return r;
}

}  // namespace kwise
