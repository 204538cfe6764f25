#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kwise {

/// A subset of [n]: bit i is set iff element i+1 belongs to the subset.
using Mask = std::uint32_t;

inline constexpr int kMaxMaskBits = 30;    // masks
inline constexpr int kMaxFamilyBits = 26;  // explicit 2^n-bit family bitmaps

[[nodiscard]] constexpr Mask full_mask(int n) noexcept { return (Mask{1} << n) - 1; }

[[nodiscard]] constexpr Mask complement(Mask m, int n) noexcept { return ~m & full_mask(n); }

[[nodiscard]] constexpr int cardinality(Mask m) noexcept { return std::popcount(m); }

[[nodiscard]] constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

/// Bit for a 1-based element.
[[nodiscard]] constexpr Mask element_bit(int element) noexcept { return Mask{1} << (element - 1); }

[[nodiscard]] constexpr bool has_element(Mask m, int element) noexcept {
  return (m & element_bit(element)) != 0;
}

/// Throws InvalidParameter unless 1 <= n <= limit.
void check_ground_size(int n, int limit = kMaxMaskBits);

/// Throws InvalidParameter unless 1 <= element <= n.
void check_element(int element, int n);

/// 1-based elements of m in ascending order.
[[nodiscard]] std::vector<int> elements_of(Mask m);

[[nodiscard]] Mask mask_from_elements(const std::vector<int>& elements, int n);

/// Parses "1,2,5" (whitespace tolerated, empty string = empty set).
[[nodiscard]] Mask parse_element_list(std::string_view text, int n);

/// "{1,2,5}"; the empty set prints as "{}".
[[nodiscard]] std::string format_mask(Mask m);

}  // namespace kwise
