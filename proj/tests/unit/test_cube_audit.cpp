#include <doctest.h>

#include <random>

#include "kwise/constructions.hpp"
#include "kwise/cube_audit.hpp"
#include "kwise/error.hpp"

using namespace kwise;

TEST_CASE("h_value") {
  CHECK(h_value(0b00101, 0b01000, 0b00011, 5) == 1);
  CHECK(h_value(0b00001, 0b01100, 0b00011, 5) == 0);
  CHECK(h_value(0b01100, 0b00001, 0b00011, 5) == 0);
  std::mt19937_64 rng(18);
  std::uniform_int_distribution<Mask> pick(0, 127);
  for (int rep = 0; rep < 500; ++rep) {
    const Mask b = pick(rng);
    const Mask c = pick(rng) & ~b;
    const Mask s = pick(rng);
    const Mask sc = complement(s, 7);
    const int h = h_value(b, c, s, 7);
    CHECK(h >= 0);
    CHECK(h == h_value(c, b, s, 7));
    const bool conforming = (is_subset(b, s) && is_subset(c, sc)) || (is_subset(b, sc) && is_subset(c, s));
    CHECK((h == 0) == conforming);
  }
}

TEST_CASE("decompose_min_h") {
  const auto d = decompose_min_h(pair_of_cubes(5, 0b00011), 0b01101, 0b00011);
  REQUIRE(d.has_value());
  CHECK(d->first == 0b00001U);
  CHECK(d->second == 0b01100U);
  CHECK_FALSE(decompose_min_h(SetFamily::from_members(1, {0}), 0b1, 0b1).has_value());

  std::mt19937_64 rng(19);
  const int n = 6;
  std::uniform_int_distribution<Mask> pick(0, full_mask(n));
  for (int rep = 0; rep < 200; ++rep) {
    SetFamily g(n);
    for (int i = 0; i < 5; ++i) g.insert(pick(rng) & pick(rng));
    g = down_closure(g);
    const Mask s = pick(rng);
    const Mask a = pick(rng);
    std::optional<std::pair<Mask, Mask>> best;
    int best_h = 0;
    const auto members = g.members();
    for (Mask b : members) {
      for (Mask c : members) {
        if (b >= c || (b & c) != 0 || (b | c) != a) continue;
        const int h = h_value(b, c, s, n);
        if (!best || h < best_h || (h == best_h && std::pair(b, c) < *best)) {
          best = std::pair(b, c);
          best_h = h;
        }
      }
    }
    const auto got = decompose_min_h(g, a, s);
    CHECK(got == best);
    if (got) {
      CHECK((got->first | got->second) == a);
      CHECK((got->first & got->second) == 0U);
    }
  }
}

TEST_CASE("partition relative to cubes") {
  const Mask s = 0b00011;
  SetFamily g = pair_of_cubes(5, s);
  g.erase(s);
  g.erase(complement(s, 5));
  const CubeParts parts = partition_relative_to_cubes(g, s);
  CHECK(parts.g1.size() == 2);
  CHECK(parts.g2.size() == 6);
  CHECK(parts.g3.empty());

  g.insert(0b00101);
  CHECK(partition_relative_to_cubes(g, s).g3 == SetFamily::from_members(5, {0b00101}));

  std::mt19937_64 rng(20);
  std::uniform_int_distribution<Mask> pick(0, 31);
  for (int rep = 0; rep < 100; ++rep) {
    SetFamily h(5);
    for (int i = 0; i < 12; ++i) h.insert(pick(rng));
    h.erase(s);
    h.erase(complement(s, 5));
    const CubeParts p = partition_relative_to_cubes(h, s);
    CHECK(p.g1.size() + p.g2.size() + p.g3.size() + (h.contains(0) ? 1 : 0) == h.size());
    CHECK(family_intersection(p.g1, p.g2).empty());
    CHECK(family_intersection(p.g1, p.g3).empty());
    CHECK(family_intersection(p.g2, p.g3).empty());
  }
}

TEST_CASE("claim audit on the extremal family, n = 9") {
  const Mask s = 0b1111;
  const SetFamily f = linked_cubes(9, s);
  const ClaimAudit a = audit_claim_counts(f, s, Rational{1, 8});
  CHECK(a.hypotheses_met);
  CHECK(a.family_size == 45);
  CHECK(a.g_delta_f0 == 2);
  CHECK(a.uncovered_count == 420);
  CHECK(a.injection_bound == Rational{420});
  CHECK(a.cube_bound == 420);
  CHECK(a.chain_lower == 420);
  CHECK(a.chain_holds);
  CHECK(a.cube_bound_tight);
  CHECK(a.g3_empty);
  CHECK(a.iff_applicable);
  CHECK(a.iff_consistent);
}

TEST_CASE("claim audit hypotheses and errors") {
  const Mask s = 0b1111;
  const ClaimAudit tight = audit_claim_counts(linked_cubes(9, s), s, Rational{1, 16});
  CHECK_FALSE(tight.delta_within_eps);
  CHECK_FALSE(tight.hypotheses_met);
  CHECK_THROWS_AS((void)audit_claim_counts(linked_cubes(8, s), s, Rational{1, 8}), Error);
  CHECK_THROWS_AS((void)audit_claim_counts(linked_cubes(9, s), s, Rational{-1}), Error);
}

TEST_CASE("the cube bound is tight exactly when no member straddles S") {
  for (int n : {9, 11}) {
    const int ell = (n - 1) / 2;
    const Mask s = full_mask(ell);
    const Mask sc = complement(s, n);
    SetFamily g = pair_of_cubes(n, s);
    g.erase(s);
    g.erase(sc);
    const ClaimAudit equal = audit_claim_counts(complement_family(g), s, Rational{1, 8});
    CHECK(equal.iff_applicable);
    CHECK(equal.g3_empty);
    CHECK(equal.cube_bound_tight);

    // Trade one member of G2 for a set straddling S and S^c.
    g.erase(Mask{1} << ell);
    g.insert(1U | (Mask{1} << ell));
    const ClaimAudit strict = audit_claim_counts(complement_family(g), s, Rational{1, 8});
    CHECK(strict.iff_applicable);
    CHECK_FALSE(strict.g3_empty);
    CHECK(strict.cube_bound_holds);
    CHECK_FALSE(strict.cube_bound_tight);
    CHECK(strict.iff_consistent);
  }
}
