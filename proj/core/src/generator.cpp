#include "kwise/generator.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kwise/error.hpp"
#include "kwise/intersecting.hpp"

namespace kwise {

namespace {

// kInWord[x]: bit positions t < 64 with t & x == 0.
constexpr std::array<std::uint64_t, 64> make_in_word() {
  std::array<std::uint64_t, 64> out{};
  for (unsigned x = 0; x < 64; ++x) {
    for (unsigned t = 0; t < 64; ++t) {
      if ((t & x) == 0) out[x] |= std::uint64_t{1} << t;
    }
  }
  return out;
}
constexpr std::array<std::uint64_t, 64> kInWord = make_in_word();

// Every union a | b with a a member and b in `from` disjoint from a. Since
// a & b == 0, a | b == a + b, so the masks of `from` disjoint from a are
// copied a positions up: whole words move by a >> 6, bits by a & 63, and no
// carry crosses a word boundary. When `from` is the family itself each
// unordered pair is needed once: words are walked in descending order and
// the walk stops below a's own word.
void extend_by_members(const std::vector<Mask>& members, const std::vector<std::uint64_t>& from,
                       std::vector<std::uint64_t>& to, bool symmetric) {
  const std::size_t word_mask = from.size() - 1;
  for (Mask a : members) {
    const std::size_t a_hi = a >> 6;
    const unsigned a_lo = a & 63U;
    const std::uint64_t pattern = kInWord[a_lo];
    const std::size_t free = ~a_hi & word_mask;
    for (std::size_t w = free;; w = (w - 1) & free) {
      if (symmetric && w < a_hi) break;
      const std::uint64_t src = from[w] & pattern;
      if (src != 0) to[w | a_hi] |= src << a_lo;
      if (w == 0) break;
    }
  }
}

}  // namespace

Coverage coverage(const SetFamily& family, int k) {
  require(k >= 1, ErrorKind::InvalidParameter, "coverage needs k >= 1, got " + std::to_string(k));
  const auto members = family.members();
  const auto words = family.words();
  std::vector<std::uint64_t> covered(words.begin(), words.end());
  std::vector<std::uint64_t> frontier = covered;
  std::vector<std::uint64_t> next(covered.size());

  // Level j holds the masks whose shortest decomposition uses j members;
  // extending only those reaches everything expressible with j+1.
  for (int level = 2; level <= k; ++level) {
    std::fill(next.begin(), next.end(), 0);
    extend_by_members(members, frontier, next, level == 2);
    bool grew = false;
    for (std::size_t w = 0; w < next.size(); ++w) {
      next[w] &= ~covered[w];
      covered[w] |= next[w];
      grew = grew || next[w] != 0;
    }
    if (!grew) break;
    frontier.swap(next);
  }
  SetFamily out = SetFamily::from_words(family.ground_size(), std::move(covered));
  const std::size_t count = out.size();
  return {std::move(out), count};
}

bool is_generator(const SetFamily& family, int k, const Rational& eps) {
  require(eps >= Rational{0} && eps <= Rational{1}, ErrorKind::InvalidParameter,
          "eps must lie in [0,1], got " + eps.to_string());
  const auto universe = static_cast<WideInt>(family.universe_size());
  const auto uncovered = universe - static_cast<WideInt>(coverage(family, k).count);
  return uncovered * eps.den() <= static_cast<WideInt>(eps.num()) * universe;
}

CorrespondenceCheck verify_maximal_generator_correspondence(const SetFamily& family, int k) {
  require(is_maximal_k_wise(family, k, KwiseMode::Distinct), ErrorKind::NotMaximal,
          "family is not maximal " + std::to_string(k) + "-wise intersecting");
  const Coverage cov = coverage(complement_family(family), k - 1);
  CorrespondenceCheck out{true, {}};
  const Mask top = full_mask(family.ground_size());
  for (Mask m = 0; m <= top; ++m) {
    if (family.contains(m) || cov.covered.contains(m)) continue;
    out.holds = false;
    out.violations.push_back(m);
  }
  return out;
}

}  // namespace kwise
