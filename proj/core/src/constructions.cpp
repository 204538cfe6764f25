#include "kwise/constructions.hpp"

#include <string>

#include "kwise/error.hpp"

namespace kwise {
namespace {

std::int64_t pow2(int e) {
  require(e >= 0 && e <= 62, ErrorKind::CapacityExceeded, "2^" + std::to_string(e) + " overflows");
  return std::int64_t{1} << e;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  require(!__builtin_mul_overflow(a, b, &out), ErrorKind::CapacityExceeded, "size formula overflows");
  return out;
}

int exact_quotient(int n, int d, const char* what) {
  require(d > 0 && n % d == 0, ErrorKind::InvalidParameter,
          std::string(what) + " must divide n (n=" + std::to_string(n) + ", divisor=" +
              std::to_string(d) + ")");
  return n / d;
}

void check_k_at_least_3(int k) {
  require(k >= 3, ErrorKind::InvalidParameter, "k must be >= 3, got " + std::to_string(k));
}

}  // namespace

Partition::Partition(int n, std::vector<Mask> blocks) : n_(n), blocks_(std::move(blocks)) {
  check_ground_size(n);
  require(!blocks_.empty(), ErrorKind::InvalidParameter, "partition needs at least one block");
  Mask seen = 0;
  for (Mask b : blocks_) {
    require(b != 0, ErrorKind::InvalidParameter, "partition block is empty");
    require((b & ~full_mask(n)) == 0, ErrorKind::InvalidParameter, "partition block outside [n]");
    require((seen & b) == 0, ErrorKind::InvalidParameter, "partition blocks overlap");
    seen |= b;
  }
  require(seen == full_mask(n), ErrorKind::InvalidParameter, "partition blocks do not cover [n]");
}

Partition Partition::balanced(int n, int k) {
  check_ground_size(n);
  require(k >= 1 && k <= n, ErrorKind::InvalidParameter,
          "balanced partition needs 1 <= k <= n (k=" + std::to_string(k) + ")");
  std::vector<Mask> blocks;
  int next = 0;
  for (int i = 0; i < k; ++i) {
    const int len = n / k + (i < n % k ? 1 : 0);
    Mask b = 0;
    for (int j = 0; j < len; ++j) b |= Mask{1} << (next + j);
    next += len;
    blocks.push_back(b);
  }
  return {n, std::move(blocks)};
}

Partition Partition::parse(int n, std::string_view text) {
  std::vector<Mask> blocks;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto bar = text.find('|', start);
    const auto piece = text.substr(start, bar == std::string_view::npos ? text.size() - start : bar - start);
    blocks.push_back(parse_element_list(piece, n));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return {n, std::move(blocks)};
}

bool Partition::is_balanced() const noexcept {
  const int k = static_cast<int>(blocks_.size());
  const int lo = n_ / k;
  const int hi = (n_ + k - 1) / k;
  for (Mask b : blocks_) {
    const int c = cardinality(b);
    if (c < lo || c > hi) return false;
  }
  return true;
}

SetFamily linked_cubes(int n, Mask s) {
  check_ground_size(n, kMaxFamilyBits);
  require(s != 0 && s < full_mask(n), ErrorKind::InvalidParameter,
          "linked cubes need 0 < |S| < n, got S=" + format_mask(s));
  const Mask sc = complement(s, n);
  SetFamily bases(n);
  for (int e = 1; e <= n; ++e) {
    const Mask bit = element_bit(e);
    bases.insert((s & bit) != 0 ? (sc | bit) : (s | bit));
  }
  return up_closure(bases);
}

SetFamily pair_of_cubes(int n, Mask s) {
  check_ground_size(n, kMaxFamilyBits);
  return family_union(subcube(n, s & full_mask(n)), subcube(n, complement(s, n)));
}

SetFamily series_of_cubes(const Partition& partition) {
  const int n = partition.ground_size();
  check_ground_size(n, kMaxFamilyBits);
  SetFamily out(n);
  for (Mask b : partition.blocks()) out = family_union(out, subcube(n, b));
  return out;
}

Mask balanced_half(int n) {
  check_ground_size(n);
  return full_mask(n / 2);
}

std::int64_t balanced_linked_cubes_size(int n) {
  check_ground_size(n);
  return pow2((n + 1) / 2) + pow2(n / 2) - 3;
}

std::int64_t balanced_series_size(int n, int k) {
  check_ground_size(n);
  require(k >= 1, ErrorKind::InvalidParameter, "k must be >= 1");
  const int q = exact_quotient(n, k, "k");
  return checked_mul(k, pow2(q)) - (k - 1);
}

std::int64_t series_k_minus_one_size(int n, int k) {
  check_ground_size(n);
  check_k_at_least_3(k);
  const int q = exact_quotient(n, k - 1, "k-1");
  return checked_mul(k - 1, pow2(q)) - k + 2;
}

std::int64_t janzer_size(int n, int k) {
  check_ground_size(n);
  check_k_at_least_3(k);
  const int q = exact_quotient(n, k - 1, "k-1");
  const std::int64_t lead = checked_mul(checked_mul(k - 1, pow2(k - 3)), pow2(q));
  return lead - checked_mul(k - 2, pow2(k - 1) - 1);
}

BoundCurves f_nk_bound_curves(int n, int k, const Rational& c, const Rational& d) {
  check_ground_size(n);
  check_k_at_least_3(k);
  const int lower_exp = exact_quotient(n, k - 1, "k-1");
  const int upper_exp = exact_quotient(n, (k + 1) / 2, "ceil(k/2)");
  return {c * Rational{pow2(lower_exp)}, d * Rational{pow2(upper_exp)}};
}

}  // namespace kwise
