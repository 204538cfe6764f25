#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwise/mask.hpp"

namespace kwise {

/// A family of subsets of [n], stored as a 2^n-bit membership bitmap indexed
/// by mask value. The member count is cached.
class SetFamily {
 public:
  explicit SetFamily(int n);

  static SetFamily from_members(int n, std::span<const Mask> members);
  static SetFamily from_members(int n, std::initializer_list<Mask> members) {
    return from_members(n, std::span<const Mask>(members.begin(), members.size()));
  }
  /// Adopts a raw bitmap; bits beyond 2^n are cleared.
  static SetFamily from_words(int n, std::vector<std::uint64_t> words);
  static SetFamily powerset(int n);

  [[nodiscard]] int ground_size() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return size_ == 0; }
  [[nodiscard]] std::uint64_t universe_size() const noexcept { return std::uint64_t{1} << n_; }

  [[nodiscard]] bool contains(Mask m) const noexcept {
    return m < universe_size() && ((words_[m >> 6] >> (m & 63)) & 1U) != 0;
  }
  void insert(Mask m);
  void erase(Mask m);

  /// Members in ascending mask order.
  [[nodiscard]] std::vector<Mask> members() const;
  [[nodiscard]] Mask smallest_member() const;  // requires !empty()

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<Mask>((w << 6) | static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const SetFamily& a, const SetFamily& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  SetFamily(int n, std::vector<std::uint64_t> words);
  void recount() noexcept;

  int n_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lowercase hex of the membership bitmap: least-significant bit is mask 0,
/// zero-padded to ceil(2^n / 4) digits, most-significant digit first.
[[nodiscard]] std::string to_hex(const SetFamily& family);
[[nodiscard]] SetFamily from_hex(int n, std::string_view hex);

/// Human-readable member listing, e.g. "{{},{1,2}}".
[[nodiscard]] std::string format_family(const SetFamily& family);

// Set algebra on families over the same ground set.
[[nodiscard]] SetFamily family_union(const SetFamily& a, const SetFamily& b);
[[nodiscard]] SetFamily family_intersection(const SetFamily& a, const SetFamily& b);
[[nodiscard]] SetFamily family_difference(const SetFamily& a, const SetFamily& b);

/// {F^c : F in family}.
[[nodiscard]] SetFamily complement_family(const SetFamily& family);

/// 2^[n] minus the family.
[[nodiscard]] SetFamily family_complement_in_powerset(const SetFamily& family);

[[nodiscard]] bool is_up_closed(const SetFamily& family);
[[nodiscard]] bool is_down_closed(const SetFamily& family);
[[nodiscard]] SetFamily up_closure(const SetFamily& family);
[[nodiscard]] SetFamily down_closure(const SetFamily& family);

/// Members with no proper subset in the family.
[[nodiscard]] SetFamily minimal_members(const SetFamily& family);

/// {H : H in family, element not in H}. Element is 1-based.
[[nodiscard]] SetFamily restrict_minus(const SetFamily& family, int element);
/// {H \ {element} : element in H in family}.
[[nodiscard]] SetFamily restrict_plus(const SetFamily& family, int element);

/// Number of members containing the element.
[[nodiscard]] std::size_t degree(const SetFamily& family, int element);

[[nodiscard]] std::size_t symmetric_difference_count(const SetFamily& a, const SetFamily& b);
/// |a \ b|.
[[nodiscard]] std::size_t set_difference_count(const SetFamily& a, const SetFamily& b);

/// 2^S as a family on [n].
[[nodiscard]] SetFamily subcube(int n, Mask s);

}  // namespace kwise
