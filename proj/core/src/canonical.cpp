#include "kwise/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "kwise/error.hpp"

namespace kwise {
namespace {

// Splits a mask into two 5-bit halves so a relabeling costs two lookups.
struct MaskMap {
  std::array<Mask, 32> low{};
  std::array<Mask, 32> high{};

  MaskMap(const std::vector<int>& perm, int n) {
    for (Mask v = 0; v < 32; ++v) {
      Mask lo = 0;
      Mask hi = 0;
      for (int b = 0; b < 5; ++b) {
        if (((v >> b) & 1U) == 0) continue;
        if (b < n) lo |= Mask{1} << perm[static_cast<std::size_t>(b)];
        if (b + 5 < n) hi |= Mask{1} << perm[static_cast<std::size_t>(b + 5)];
      }
      low[v] = lo;
      high[v] = hi;
    }
  }

  [[nodiscard]] Mask operator()(Mask m) const { return low[m & 31U] | high[(m >> 5) & 31U]; }
};

// Bitmap of the relabeled family, word order as in SetFamily.
void permuted_words(const std::vector<Mask>& members, const MaskMap& map, std::vector<std::uint64_t>& out) {
  std::fill(out.begin(), out.end(), 0);
  for (Mask m : members) {
    const Mask p = map(m);
    out[p >> 6] |= std::uint64_t{1} << (p & 63);
  }
}

// a < b as 2^n-bit integers.
bool less_as_integer(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

SetFamily permute_family(const SetFamily& family, const std::vector<int>& perm) {
  const int n = family.ground_size();
  require(static_cast<int>(perm.size()) == n, ErrorKind::InvalidParameter, "permutation has wrong length");
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int p : perm) {
    require(p >= 0 && p < n && seen[static_cast<std::size_t>(p)] == 0, ErrorKind::InvalidParameter,
            "not a permutation of the ground set");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  SetFamily out(n);
  family.for_each([&](Mask m) {
    Mask image = 0;
    for (Mask bits = m; bits != 0; bits &= bits - 1) {
      image |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    out.insert(image);
  });
  return out;
}

SetFamily canonical_form(const SetFamily& family) {
  const int n = family.ground_size();
  require(n <= kCanonicalLimit, ErrorKind::CapacityExceeded,
          "canonical form is limited to n <= " + std::to_string(kCanonicalLimit));
  const auto members = family.members();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<std::uint64_t> best(family.words().size());
  std::vector<std::uint64_t> candidate(best.size());
  permuted_words(members, MaskMap(perm, n), best);
  while (std::next_permutation(perm.begin(), perm.end())) {
    permuted_words(members, MaskMap(perm, n), candidate);
    if (less_as_integer(candidate, best)) best.swap(candidate);
  }
  return SetFamily::from_words(n, std::move(best));
}

bool isomorphic(const SetFamily& a, const SetFamily& b) {
  if (a.ground_size() != b.ground_size() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace kwise
