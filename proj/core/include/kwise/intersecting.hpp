#pragma once

#include <optional>
#include <string_view>

#include "kwise/family.hpp"

namespace kwise {

/// How collections of members are formed when testing k-wise intersection.
///  - Distinct: every k pairwise-distinct members share an element; vacuously
///    true when the family has fewer than k members.
///  - WithRepetition: additionally every j distinct members, 2 <= j <= k, must
///    share an element (equivalent to allowing repeats in the collection).
enum class KwiseMode { Distinct, WithRepetition };

[[nodiscard]] std::string_view to_string(KwiseMode mode) noexcept;
[[nodiscard]] KwiseMode parse_mode(std::string_view text);

[[nodiscard]] bool is_k_wise_intersecting(const SetFamily& family, int k,
                                          KwiseMode mode = KwiseMode::Distinct);

/// Smallest non-member that can be added keeping the k-wise property, or
/// nullopt when the family is maximal. Throws NotIntersecting if the family
/// itself is not k-wise intersecting.
[[nodiscard]] std::optional<Mask> addable_witness(const SetFamily& family, int k,
                                                  KwiseMode mode = KwiseMode::Distinct);

[[nodiscard]] bool is_maximal_k_wise(const SetFamily& family, int k,
                                     KwiseMode mode = KwiseMode::Distinct);

/// Greedy extension to a maximal family: candidates are scanned in ascending
/// mask order, pass after pass, until a full pass adds nothing.
[[nodiscard]] SetFamily maximal_closure(const SetFamily& family, int k,
                                        KwiseMode mode = KwiseMode::Distinct);

/// Masks m such that some intersection of at most `depth` members is
/// disjoint from m. For depth = k-1 these are exactly the non-members that
/// cannot be added to a family of at least k-1 members.
[[nodiscard]] SetFamily blocked_masks(const SetFamily& family, int depth);

}  // namespace kwise
