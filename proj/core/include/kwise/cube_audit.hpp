#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "kwise/family.hpp"
#include "kwise/rational.hpp"

namespace kwise {

/// min{|B \ S| + |C \ S^c|, |B \ S^c| + |C \ S|}: how far the pair {B, C} is
/// from splitting along S.
[[nodiscard]] int h_value(Mask b, Mask c, Mask s, int n);

/// Among unordered pairs {B, C} of distinct members with B and C disjoint and
/// B | C = A, one minimizing h_value. Ties go to the smaller (min, max) mask
/// pair. Returned as (min mask, max mask).
[[nodiscard]] std::optional<std::pair<Mask, Mask>> decompose_min_h(const SetFamily& family, Mask a, Mask s);

struct CubeParts {
  SetFamily g1;  // members strictly between the empty set and S
  SetFamily g2;  // members strictly between the empty set and S^c
  SetFamily g3;  // members outside 2^S and 2^{S^c}
};

[[nodiscard]] CubeParts partition_relative_to_cubes(const SetFamily& g, Mask s);

struct ClaimAudit {
  int ell = 0;
  Rational eps;
  std::int64_t family_size = 0;

  // Hypotheses under which the two counting inequalities are stated.
  bool s_has_size_ell = false;
  bool maximal_3wise = false;
  bool empty_in_g = false;
  bool s_not_in_g = false;
  bool sc_not_in_g = false;
  std::int64_t g_delta_f0 = 0;
  bool delta_within_eps = false;  // |G delta F0| <= eps 2^ell
  bool size_at_most_extremal = false;  // |F| <= 3 2^ell - 3
  bool hypotheses_met = false;

  std::int64_t g1 = 0;
  std::int64_t g2 = 0;
  std::int64_t g3 = 0;

  // |2^[n] \ (F u F0)| <= |G1||G2| + |G3| eps 2^ell
  std::int64_t uncovered_count = 0;
  Rational injection_bound;
  bool injection_holds = false;

  // |G1||G2| + |G3| eps 2^ell <= (2^ell - 2)(2^{ell+1} - 2)
  std::int64_t cube_bound = 0;
  bool cube_bound_holds = false;
  bool cube_bound_tight = false;
  bool g3_empty = false;
  // The equality characterization compares families with the same total
  // |G1| + |G2| + |G3|, so it is checked only when |G| = 3 2^ell - 3.
  bool iff_applicable = false;
  bool iff_consistent = false;

  // 2^{2ell+1} - (3 2^ell - 1) - |F| <= ... <= 2^{2ell+1} - 6 2^ell + 4
  std::int64_t chain_lower = 0;
  std::int64_t chain_upper = 0;
  bool chain_holds = false;
};

/// Evaluates both sides of the two counting inequalities for a family F on [n],
/// n = 2 ell + 1 odd, with G the complements of F and F0 = 2^S u 2^{S^c}.
/// Verdicts are only meaningful when hypotheses_met.
[[nodiscard]] ClaimAudit audit_claim_counts(const SetFamily& family, Mask s, const Rational& eps);

}  // namespace kwise
