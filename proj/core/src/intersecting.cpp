#include "kwise/intersecting.hpp"

#include <string>
#include <vector>

#include "kwise/error.hpp"

namespace kwise {
namespace {

void check_k(int k) {
  require(k >= 2, ErrorKind::InvalidParameter, "k must be >= 2, got " + std::to_string(k));
}

// Intersections of between 1 and `depth` generators, by breadth-first
// deepening. Stops early once the empty set shows up if asked to.
SetFamily reach_intersections(const std::vector<Mask>& generators, int n, int depth,
                              bool stop_on_empty) {
  SetFamily reach(n);
  std::vector<Mask> frontier;
  for (Mask g : generators) {
    if (!reach.contains(g)) {
      reach.insert(g);
      frontier.push_back(g);
    }
  }
  if (stop_on_empty && reach.contains(0)) return reach;
  std::vector<Mask> next;
  for (int level = 2; level <= depth && !frontier.empty(); ++level) {
    next.clear();
    for (Mask r : frontier) {
      for (Mask g : generators) {
        const Mask x = r & g;
        if (reach.contains(x)) continue;
        reach.insert(x);
        if (x == 0 && stop_on_empty) return reach;
        next.push_back(x);
      }
    }
    frontier.swap(next);
  }
  return reach;
}

Mask total_intersection(const SetFamily& family) {
  Mask all = full_mask(family.ground_size());
  family.for_each([&](Mask m) { all &= m; });
  return all;
}

// First mask of 2^[n] that is in neither bitmap, or nullopt.
std::optional<Mask> first_outside(const SetFamily& a, const SetFamily& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  const std::uint64_t universe = a.universe_size();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    const std::uint64_t free = ~(wa[w] | wb[w]);
    if (free == 0) continue;
    const std::uint64_t m = (w << 6) | static_cast<std::uint64_t>(std::countr_zero(free));
    if (m < universe) return static_cast<Mask>(m);
    return std::nullopt;
  }
  return std::nullopt;
}

// Down-set that grows one generator at a time; each mask is inserted once.
class DownSet {
 public:
  explicit DownSet(int n) : set_(n) {}

  void add(Mask top) {
    if (set_.contains(top)) return;
    stack_.push_back(top);
    while (!stack_.empty()) {
      const Mask x = stack_.back();
      stack_.pop_back();
      if (set_.contains(x)) continue;
      set_.insert(x);
      for (Mask bits = x; bits != 0; bits &= bits - 1) {
        const Mask y = x & ~(bits & (~bits + 1));
        if (!set_.contains(y)) stack_.push_back(y);
      }
    }
  }

  [[nodiscard]] bool contains(Mask m) const { return set_.contains(m); }

 private:
  SetFamily set_;
  std::vector<Mask> stack_;
};

}  // namespace

std::string_view to_string(KwiseMode mode) noexcept {
  return mode == KwiseMode::Distinct ? "distinct" : "repetition";
}

KwiseMode parse_mode(std::string_view text) {
  if (text == "distinct") return KwiseMode::Distinct;
  if (text == "repetition" || text == "with-repetition") return KwiseMode::WithRepetition;
  fail(ErrorKind::Parse, "unknown mode '" + std::string(text) + "' (distinct|repetition)");
}

bool is_k_wise_intersecting(const SetFamily& family, int k, KwiseMode mode) {
  check_k(k);
  const std::size_t size = family.size();
  if (size < static_cast<std::size_t>(k)) {
    if (mode == KwiseMode::Distinct || size < 2) return true;
    return total_intersection(family) != 0;
  }
  // With at least k members, any j <= k distinct members meeting in the empty
  // set can be padded to k distinct ones, so both modes reduce to: the empty
  // set is not an intersection of at most k members. Replacing a member by a
  // minimal member below it only shrinks intersections.
  if (family.contains(0)) return false;
  const auto generators = minimal_members(family).members();
  return !reach_intersections(generators, family.ground_size(), k, true).contains(0);
}

SetFamily blocked_masks(const SetFamily& family, int depth) {
  const int n = family.ground_size();
  const auto generators = minimal_members(family).members();
  const SetFamily reach = reach_intersections(generators, n, depth, false);
  SetFamily tops(n);
  reach.for_each([&](Mask r) { tops.insert(complement(r, n)); });
  return down_closure(tops);
}

std::optional<Mask> addable_witness(const SetFamily& family, int k, KwiseMode mode) {
  require(is_k_wise_intersecting(family, k, mode), ErrorKind::NotIntersecting,
          "family is not " + std::to_string(k) + "-wise intersecting (" +
              std::string(to_string(mode)) + ")");
  const int n = family.ground_size();
  const std::size_t size = family.size();
  if (size == family.universe_size()) return std::nullopt;

  if (size + 1 < static_cast<std::size_t>(k)) {
    if (mode == KwiseMode::Distinct || size == 0) return first_outside(family, SetFamily(n));
    const Mask common = total_intersection(family);
    for (Mask m = 0; m <= full_mask(n); ++m) {
      if (!family.contains(m) && (m & common) != 0) return m;
    }
    return std::nullopt;
  }
  return first_outside(family, blocked_masks(family, k - 1));
}

bool is_maximal_k_wise(const SetFamily& family, int k, KwiseMode mode) {
  return !addable_witness(family, k, mode).has_value();
}

SetFamily maximal_closure(const SetFamily& family, int k, KwiseMode mode) {
  require(is_k_wise_intersecting(family, k, mode), ErrorKind::NotIntersecting,
          "closure input is not " + std::to_string(k) + "-wise intersecting");
  const int n = family.ground_size();
  const auto depth = static_cast<std::size_t>(k - 1);

  SetFamily current(n);
  Mask common = full_mask(n);
  // levels[j]: intersections of at most j+1 members of `current`.
  std::vector<SetFamily> levels(depth, SetFamily(n));
  DownSet blocked(n);

  auto add = [&](Mask m) {
    current.insert(m);
    common &= m;
    for (std::size_t j = depth - 1; j >= 1; --j) {
      const auto lower = levels[j - 1].members();
      for (Mask r : lower) {
        const Mask x = r & m;
        if (levels[j].contains(x)) continue;
        levels[j].insert(x);
        if (j == depth - 1) blocked.add(complement(x, n));
      }
    }
    for (std::size_t j = 0; j < depth; ++j) {
      if (!levels[j].contains(m)) {
        levels[j].insert(m);
        if (j == depth - 1) blocked.add(complement(m, n));
      }
    }
  };

  auto addable = [&](Mask m) {
    const std::size_t size = current.size();
    if (size + 1 < static_cast<std::size_t>(k)) {
      return mode == KwiseMode::Distinct || size == 0 || (m & common) != 0;
    }
    return !blocked.contains(m);
  };

  family.for_each(add);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask m = 0; m <= full_mask(n); ++m) {
      if (current.contains(m) || !addable(m)) continue;
      add(m);
      changed = true;
    }
  }
  return current;
}

}  // namespace kwise
