#include "kwise/family.hpp"

#include <array>
#include <bit>
#include <string>

#include "kwise/error.hpp"

namespace kwise {
namespace {

// Word positions whose in-word index has bit i clear, for coordinates i < 6.
constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

std::size_t word_count(int n) { return n >= 6 ? (std::size_t{1} << (n - 6)) : 1; }

std::uint64_t tail_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1U << n)) - 1);
}

void check_same_ground(const SetFamily& a, const SetFamily& b) {
  require(a.ground_size() == b.ground_size(), ErrorKind::GroundMismatch,
          "ground sizes differ: " + std::to_string(a.ground_size()) + " vs " +
              std::to_string(b.ground_size()));
}

void sweep_up(std::vector<std::uint64_t>& words, int n) {
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const unsigned shift = 1U << i;
      for (auto& w : words) w |= (w & kLowHalf[static_cast<std::size_t>(i)]) << shift;
    } else {
      const std::size_t step = std::size_t{1} << (i - 6);
      for (std::size_t j = 0; j < words.size(); ++j) {
        if ((j & step) == 0) words[j | step] |= words[j];
      }
    }
  }
}

void sweep_down(std::vector<std::uint64_t>& words, int n) {
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const unsigned shift = 1U << i;
      for (auto& w : words) w |= (w >> shift) & kLowHalf[static_cast<std::size_t>(i)];
    } else {
      const std::size_t step = std::size_t{1} << (i - 6);
      for (std::size_t j = 0; j < words.size(); ++j) {
        if ((j & step) == 0) words[j] |= words[j | step];
      }
    }
  }
}

template <typename Op>
SetFamily combine(const SetFamily& a, const SetFamily& b, Op op) {
  check_same_ground(a, b);
  std::vector<std::uint64_t> out(a.words().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a.words()[i], b.words()[i]);
  return SetFamily::from_words(a.ground_size(), std::move(out));
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

SetFamily::SetFamily(int n) : n_(n) {
  check_ground_size(n, kMaxFamilyBits);
  words_.assign(word_count(n), 0);
}

SetFamily::SetFamily(int n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {
  check_ground_size(n, kMaxFamilyBits);
  require(words_.size() == word_count(n), ErrorKind::InvalidParameter,
          "bitmap has wrong word count for n=" + std::to_string(n));
  words_.back() &= tail_mask(n);
  recount();
}

SetFamily SetFamily::from_members(int n, std::span<const Mask> members) {
  SetFamily f(n);
  for (Mask m : members) f.insert(m);
  return f;
}

SetFamily SetFamily::from_words(int n, std::vector<std::uint64_t> words) {
  return SetFamily(n, std::move(words));
}

SetFamily SetFamily::powerset(int n) {
  return SetFamily(n, std::vector<std::uint64_t>(word_count(n), ~std::uint64_t{0}));
}

void SetFamily::recount() noexcept {
  size_ = 0;
  for (auto w : words_) size_ += static_cast<std::size_t>(std::popcount(w));
}

void SetFamily::insert(Mask m) {
  require(m < universe_size(), ErrorKind::InvalidParameter,
          "mask " + std::to_string(m) + " outside 2^[" + std::to_string(n_) + "]");
  auto& w = words_[m >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (m & 63);
  if ((w & bit) == 0) {
    w |= bit;
    ++size_;
  }
}

void SetFamily::erase(Mask m) {
  if (m >= universe_size()) return;
  auto& w = words_[m >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (m & 63);
  if ((w & bit) != 0) {
    w &= ~bit;
    --size_;
  }
}

std::vector<Mask> SetFamily::members() const {
  std::vector<Mask> out;
  out.reserve(size_);
  for_each([&](Mask m) { out.push_back(m); });
  return out;
}

Mask SetFamily::smallest_member() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Mask>((w << 6) | static_cast<std::size_t>(std::countr_zero(words_[w])));
  }
  fail(ErrorKind::InvalidParameter, "smallest_member of empty family");
}

std::string to_hex(const SetFamily& family) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint64_t bits = family.universe_size();
  const std::uint64_t digits = (bits + 3) / 4;
  std::string out(digits, '0');
  const auto words = family.words();
  for (std::uint64_t d = 0; d < digits; ++d) {
    const std::uint64_t bit = d * 4;
    const unsigned nibble = static_cast<unsigned>((words[bit >> 6] >> (bit & 63)) & 0xFU);
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

SetFamily from_hex(int n, std::string_view hex) {
  SetFamily probe(n);
  const std::uint64_t bits = probe.universe_size();
  const std::uint64_t digits = (bits + 3) / 4;
  require(hex.size() == digits, ErrorKind::Parse,
          "hex family for n=" + std::to_string(n) + " needs " + std::to_string(digits) +
              " digits, got " + std::to_string(hex.size()));
  std::vector<std::uint64_t> words(probe.words().size(), 0);
  for (std::uint64_t d = 0; d < digits; ++d) {
    const int v = hex_value(hex[digits - 1 - d]);
    require(v >= 0, ErrorKind::Parse, "non-hex digit in family");
    const std::uint64_t bit = d * 4;
    words[bit >> 6] |= static_cast<std::uint64_t>(v) << (bit & 63);
  }
  if (n < 2) {
    const std::uint64_t valid = (std::uint64_t{1} << bits) - 1;
    require((words[0] & ~valid) == 0, ErrorKind::Parse, "hex family sets bits beyond 2^n");
  }
  return SetFamily::from_words(n, std::move(words));
}

std::string format_family(const SetFamily& family) {
  std::string out = "{";
  bool first = true;
  family.for_each([&](Mask m) {
    if (!first) out += ',';
    out += format_mask(m);
    first = false;
  });
  out += '}';
  return out;
}

SetFamily family_union(const SetFamily& a, const SetFamily& b) {
  return combine(a, b, [](auto x, auto y) { return x | y; });
}

SetFamily family_intersection(const SetFamily& a, const SetFamily& b) {
  return combine(a, b, [](auto x, auto y) { return x & y; });
}

SetFamily family_difference(const SetFamily& a, const SetFamily& b) {
  return combine(a, b, [](auto x, auto y) { return x & ~y; });
}

SetFamily complement_family(const SetFamily& family) {
  const int n = family.ground_size();
  SetFamily out(n);
  family.for_each([&](Mask m) { out.insert(complement(m, n)); });
  return out;
}

SetFamily family_complement_in_powerset(const SetFamily& family) {
  std::vector<std::uint64_t> words(family.words().begin(), family.words().end());
  for (auto& w : words) w = ~w;
  return SetFamily::from_words(family.ground_size(), std::move(words));
}

SetFamily up_closure(const SetFamily& family) {
  std::vector<std::uint64_t> words(family.words().begin(), family.words().end());
  sweep_up(words, family.ground_size());
  return SetFamily::from_words(family.ground_size(), std::move(words));
}

SetFamily down_closure(const SetFamily& family) {
  std::vector<std::uint64_t> words(family.words().begin(), family.words().end());
  sweep_down(words, family.ground_size());
  return SetFamily::from_words(family.ground_size(), std::move(words));
}

bool is_up_closed(const SetFamily& family) { return up_closure(family) == family; }

bool is_down_closed(const SetFamily& family) { return down_closure(family) == family; }

SetFamily minimal_members(const SetFamily& family) {
  const int n = family.ground_size();
  const SetFamily up = up_closure(family);
  // Mark every mask that has a maximal proper subset inside the up-closure.
  std::vector<std::uint64_t> covered(up.words().size(), 0);
  const auto src = up.words();
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const unsigned shift = 1U << i;
      for (std::size_t w = 0; w < covered.size(); ++w) {
        covered[w] |= (src[w] & kLowHalf[static_cast<std::size_t>(i)]) << shift;
      }
    } else {
      const std::size_t step = std::size_t{1} << (i - 6);
      for (std::size_t j = 0; j < covered.size(); ++j) {
        if ((j & step) == 0) covered[j | step] |= src[j];
      }
    }
  }
  std::vector<std::uint64_t> words(family.words().begin(), family.words().end());
  for (std::size_t w = 0; w < words.size(); ++w) words[w] &= ~covered[w];
  return SetFamily::from_words(n, std::move(words));
}

SetFamily restrict_minus(const SetFamily& family, int element) {
  check_element(element, family.ground_size());
  const Mask bit = element_bit(element);
  SetFamily out(family.ground_size());
  family.for_each([&](Mask m) {
    if ((m & bit) == 0) out.insert(m);
  });
  return out;
}

SetFamily restrict_plus(const SetFamily& family, int element) {
  check_element(element, family.ground_size());
  const Mask bit = element_bit(element);
  SetFamily out(family.ground_size());
  family.for_each([&](Mask m) {
    if ((m & bit) != 0) out.insert(m & ~bit);
  });
  return out;
}

std::size_t degree(const SetFamily& family, int element) {
  check_element(element, family.ground_size());
  const Mask bit = element_bit(element);
  std::size_t count = 0;
  family.for_each([&](Mask m) { count += (m & bit) != 0 ? 1 : 0; });
  return count;
}

std::size_t symmetric_difference_count(const SetFamily& a, const SetFamily& b) {
  check_same_ground(a, b);
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    count += static_cast<std::size_t>(std::popcount(a.words()[i] ^ b.words()[i]));
  }
  return count;
}

std::size_t set_difference_count(const SetFamily& a, const SetFamily& b) {
  check_same_ground(a, b);
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    count += static_cast<std::size_t>(std::popcount(a.words()[i] & ~b.words()[i]));
  }
  return count;
}

SetFamily subcube(int n, Mask s) {
  SetFamily out(n);
  require(s <= full_mask(n), ErrorKind::InvalidParameter, "subcube base outside [n]");
  Mask sub = s;
  while (true) {
    out.insert(sub);
    if (sub == 0) break;
    sub = (sub - 1) & s;
  }
  return out;
}

}  // namespace kwise
