#include <doctest.h>

#include <random>

#include "kwise/constructions.hpp"
#include "kwise/error.hpp"
#include "kwise/generator.hpp"
#include "kwise/intersecting.hpp"
#include "oracle/naive.hpp"

using namespace kwise;

namespace {

oracle::Masks as_masks(const SetFamily& f) {
  const auto m = f.members();
  return {m.begin(), m.end()};
}

}  // namespace

TEST_CASE("coverage examples") {
  for (int n = 1; n <= 10; ++n) {
    for (Mask s = 0; s <= full_mask(n); ++s) CHECK(coverage(pair_of_cubes(n, s), 2).count == (std::size_t{1} << n));
  }
  const Coverage empty_only = coverage(SetFamily::from_members(3, {0}), 2);
  CHECK(empty_only.count == 1);
  CHECK(empty_only.covered == SetFamily::from_members(3, {0}));
  const Coverage two = coverage(SetFamily::from_members(3, {0b001, 0b010}), 2);
  CHECK(two.covered == SetFamily::from_members(3, {0b001, 0b010, 0b011}));
  CHECK(two.count == 3);
  CHECK_THROWS_AS((void)coverage(SetFamily(3), 0), Error);
}

TEST_CASE("coverage agrees with brute force") {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << (1U << n)); ++b) {
      const SetFamily g = SetFamily::from_words(n, {b});
      for (int k = 1; k <= 4; ++k) {
        const auto expected = oracle::coverage(oracle::members_of(b), k);
        CHECK(as_masks(coverage(g, k).covered) == expected);
      }
    }
  }
  std::mt19937_64 rng(12);
  for (int n : {4, 6, 7, 8}) {
    for (int rep = 0; rep < 60; ++rep) {
      SetFamily g(n);
      std::uniform_int_distribution<Mask> pick(0, full_mask(n));
      const int size = std::uniform_int_distribution<int>(0, 14)(rng);
      for (int i = 0; i < size; ++i) g.insert(pick(rng) & pick(rng));
      for (int k = 1; k <= 4; ++k) CHECK(as_masks(coverage(g, k).covered) == oracle::coverage(as_masks(g), k));
    }
  }
}

TEST_CASE("coverage is monotone and reduces to the family at k = 1") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 6;
    SetFamily g(n);
    std::uniform_int_distribution<Mask> pick(0, full_mask(n));
    for (int i = 0; i < 10; ++i) g.insert(pick(rng) & pick(rng));
    SetFamily bigger = g;
    bigger.insert(pick(rng));
    CHECK(coverage(g, 1).covered == g);
    for (int k = 1; k <= 3; ++k) {
      CHECK(family_difference(coverage(g, k).covered, coverage(bigger, k).covered).empty());
      CHECK(family_difference(coverage(g, k).covered, coverage(g, k + 1).covered).empty());
    }
    const SetFamily down = down_closure(g);
    CHECK(is_down_closed(coverage(down, 2).covered));
    CHECK((coverage(down, 2).count == (std::size_t{1} << n)) == is_generator(down, 2, Rational{0}));
  }
}

TEST_CASE("is_generator") {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (n % k == 0) CHECK(is_generator(series_of_cubes(Partition::balanced(n, k)), k, Rational{0}));
    }
  }
  CHECK_FALSE(is_generator(SetFamily::from_members(1, {0}), 2, Rational{0}));
  CHECK(is_generator(SetFamily::from_members(1, {0}), 2, Rational{1, 2}));
  CHECK_FALSE(is_generator(linked_cubes(5, 0b11), 2, Rational{0}));
  CHECK_THROWS_AS((void)is_generator(SetFamily(2), 2, Rational{3, 2}), Error);
  CHECK_THROWS_AS((void)is_generator(SetFamily(2), 2, Rational{-1, 2}), Error);
}

TEST_CASE("maximal families and the complement generator") {
  for (int n = 6; n <= 9; ++n) {
    // Three seed members keep the empty set out of the closure.
    const SetFamily seed = SetFamily::from_members(n, {full_mask(n), full_mask(n) & ~1U, full_mask(n) & ~2U});
    const SetFamily f = maximal_closure(seed, 3);
    CHECK(f.size() >= 3);
    const CorrespondenceCheck c = verify_maximal_generator_correspondence(f, 3);
    CHECK(c.holds);
    CHECK(c.violations.empty());
  }
  for (int n = 4; n <= 9; ++n) {
    CHECK(verify_maximal_generator_correspondence(linked_cubes(n, balanced_half(n)), 3).holds);
  }

  // Two-member maximal family below k members: the correspondence fails.
  const CorrespondenceCheck tiny = verify_maximal_generator_correspondence(SetFamily::from_members(2, {0, 3}), 3);
  CHECK_FALSE(tiny.holds);
  CHECK(tiny.violations == std::vector<Mask>{1, 2});

  CHECK_THROWS_AS((void)verify_maximal_generator_correspondence(linked_cubes(3, 0b001), 3), Error);
}
