#pragma once

#include <vector>

#include "kwise/family.hpp"

namespace kwise {

inline constexpr int kCanonicalLimit = 10;

/// Applies a coordinate permutation: element i+1 is sent to perm[i]+1.
[[nodiscard]] SetFamily permute_family(const SetFamily& family, const std::vector<int>& perm);

/// Isomorphism-invariant representative: among all n! relabelings of the
/// ground set, the one whose membership bitmap is smallest when read as a
/// 2^n-bit integer. Requires n <= kCanonicalLimit.
[[nodiscard]] SetFamily canonical_form(const SetFamily& family);

[[nodiscard]] bool isomorphic(const SetFamily& a, const SetFamily& b);

}  // namespace kwise
