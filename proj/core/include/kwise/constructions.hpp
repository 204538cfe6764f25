#pragma once

#include <cstdint>
#include <vector>

#include "kwise/family.hpp"
#include "kwise/rational.hpp"

namespace kwise {

/// Ordered blocks S_1, ..., S_k: pairwise disjoint, nonempty, covering [n].
class Partition {
 public:
  /// Throws InvalidParameter if the blocks do not partition [n].
  Partition(int n, std::vector<Mask> blocks);

  /// Contiguous blocks, the first n mod k of them one element larger.
  static Partition balanced(int n, int k);
  /// Parses "1,2|3,4,5".
  static Partition parse(int n, std::string_view text);

  [[nodiscard]] int ground_size() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Mask>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] std::size_t block_count() const noexcept { return blocks_.size(); }

  /// Every block has floor(n/k) or ceil(n/k) elements, k = block_count().
  [[nodiscard]] bool is_balanced() const noexcept;

 private:
  int n_;
  std::vector<Mask> blocks_;
};

/// {A : S strictly inside A} together with {B : S^c strictly inside B}.
[[nodiscard]] SetFamily linked_cubes(int n, Mask s);

/// 2^S together with 2^{S^c}.
[[nodiscard]] SetFamily pair_of_cubes(int n, Mask s);

/// Union of the down-cubes 2^{S_i} over the blocks.
[[nodiscard]] SetFamily series_of_cubes(const Partition& partition);

/// The first floor(n/2) elements, the usual balanced choice of S.
[[nodiscard]] Mask balanced_half(int n);

// Closed-form sizes. All are exact integers; inputs that would need a
// fractional exponent are rejected with InvalidParameter.

/// 2^ceil(n/2) + 2^floor(n/2) - 3.
[[nodiscard]] std::int64_t balanced_linked_cubes_size(int n);

/// k * 2^(n/k) - (k-1); requires k | n.
[[nodiscard]] std::int64_t balanced_series_size(int n, int k);

/// (k-1) * 2^(n/(k-1)) - k + 2, the size of F_{n,k-1}; requires k >= 3, (k-1) | n.
[[nodiscard]] std::int64_t series_k_minus_one_size(int n, int k);

/// (k-1) 2^(k-3) 2^(n/(k-1)) - (k-2)(2^(k-1) - 1); requires k >= 3, (k-1) | n.
[[nodiscard]] std::int64_t janzer_size(int n, int k);

struct BoundCurves {
  Rational lower;  // c * 2^(n/(k-1))
  Rational upper;  // d * 2^(n/ceil(k/2))
};

/// Reference curves for the known order of magnitude of f(n,k); requires
/// k >= 3, (k-1) | n and ceil(k/2) | n.
[[nodiscard]] BoundCurves f_nk_bound_curves(int n, int k, const Rational& c = Rational{1},
                                            const Rational& d = Rational{1});

}  // namespace kwise
