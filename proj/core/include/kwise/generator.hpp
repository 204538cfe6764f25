#pragma once

#include <cstddef>
#include <vector>

#include "kwise/family.hpp"
#include "kwise/rational.hpp"

namespace kwise {

struct Coverage {
  SetFamily covered;
  std::size_t count;
};

/// Masks that are a disjoint union of between 1 and k members of the family
/// (a single member covers itself).
[[nodiscard]] Coverage coverage(const SetFamily& family, int k);

/// True iff at most eps * 2^n subsets of [n] are left uncovered by
/// coverage(family, k). eps must lie in [0, 1].
[[nodiscard]] bool is_generator(const SetFamily& family, int k, const Rational& eps);

struct CorrespondenceCheck {
  bool holds;
  std::vector<Mask> violations;  // non-members not covered, ascending
};

/// For a maximal k-wise intersecting family F (Distinct mode), checks that
/// every non-member of F is a disjoint union of at most k-1 complements of
/// members of F. Throws NotMaximal when F is not maximal.
[[nodiscard]] CorrespondenceCheck verify_maximal_generator_correspondence(const SetFamily& family,
                                                                          int k);

}  // namespace kwise
