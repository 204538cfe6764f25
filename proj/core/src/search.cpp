#include "kwise/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <numeric>
#include <set>
#include <string>

#include "kwise/canonical.hpp"
#include "kwise/constructions.hpp"
#include "kwise/error.hpp"

namespace kwise {
namespace {

using Clock = std::chrono::steady_clock;

// Families on [n], n <= 7, as 128-bit membership words.
__extension__ typedef unsigned __int128 Bits;

constexpr Bits bit_at(unsigned m) { return Bits{1} << m; }

int popcount(Bits b) {
  return std::popcount(static_cast<std::uint64_t>(b)) + std::popcount(static_cast<std::uint64_t>(b >> 64));
}

unsigned lowest(Bits b) {
  const auto lo = static_cast<std::uint64_t>(b);
  return lo != 0 ? static_cast<unsigned>(std::countr_zero(lo))
                 : 64U + static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(b >> 64)));
}

template <typename Fn>
void for_each_bit(Bits b, Fn&& fn) {
  while (b != 0) {
    const unsigned m = lowest(b);
    fn(static_cast<Mask>(m));
    b &= b - 1;
  }
}

SetFamily to_family(Bits b, int n) {
  std::vector<std::uint64_t> words(1, static_cast<std::uint64_t>(b));
  if (n == 7) words.push_back(static_cast<std::uint64_t>(b >> 64));
  return SetFamily::from_words(n, std::move(words));
}

struct Lattice {
  int n;
  unsigned size;  // 2^n
  Bits full;
  std::vector<Bits> low;  // positions with coordinate i clear
  std::vector<Bits> up;   // up[m]: supersets of m
  std::vector<Bits> down; // down[m]: subsets of m

  explicit Lattice(int n_) : n(n_), size(1U << n_) {
    full = size == 128 ? ~Bits{0} : (bit_at(size) - 1);
    for (int i = 0; i < n; ++i) {
      Bits b = 0;
      for (unsigned m = 0; m < size; ++m) {
        if (((m >> i) & 1U) == 0) b |= bit_at(m);
      }
      low.push_back(b);
    }
    up.resize(size);
    down.resize(size);
    for (unsigned m = 0; m < size; ++m) {
      Bits u = 0;
      Bits d = 0;
      for (unsigned x = 0; x < size; ++x) {
        if ((m & ~x) == 0) u |= bit_at(x);
        if ((x & ~m) == 0) d |= bit_at(x);
      }
      up[m] = u;
      down[m] = d;
    }
  }

  [[nodiscard]] Bits down_closure(Bits b) const {
    for (int i = 0; i < n; ++i) b |= (b >> (1U << i)) & low[static_cast<std::size_t>(i)];
    return b;
  }

  // Minimal elements of an up-set.
  [[nodiscard]] Bits minimal(Bits upset) const {
    Bits covered = 0;
    for (int i = 0; i < n; ++i) covered |= (upset & low[static_cast<std::size_t>(i)]) << (1U << i);
    return upset & ~covered;
  }

  // Intersections of at most `depth` generators.
  [[nodiscard]] Bits reach(Bits generators, int depth, bool stop_on_empty) const {
    std::array<Mask, 128> gens{};
    std::size_t g = 0;
    for_each_bit(generators, [&](Mask m) { gens[g++] = m; });
    Bits seen = generators;
    if (stop_on_empty && (seen & 1U) != 0) return seen;
    std::array<Mask, 128> frontier{};
    std::array<Mask, 128> next{};
    std::size_t f = g;
    std::copy(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(g), frontier.begin());
    for (int level = 2; level <= depth && f > 0; ++level) {
      std::size_t nf = 0;
      for (std::size_t i = 0; i < f; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
          const Mask x = frontier[i] & gens[j];
          if ((seen & bit_at(x)) != 0) continue;
          seen |= bit_at(x);
          if (x == 0 && stop_on_empty) return seen;
          next[nf++] = x;
        }
      }
      std::swap(frontier, next);
      f = nf;
    }
    return seen;
  }

  [[nodiscard]] Bits complements(Bits b) const {
    Bits out = 0;
    for_each_bit(b, [&](Mask m) { out |= bit_at(~m & (size - 1)); });
    return out;
  }
};

std::int64_t binomial_sum(std::int64_t s, int terms) {
  // sum_{j=1}^{terms} C(s, j), saturating.
  std::int64_t total = 0;
  std::int64_t c = 1;
  for (int j = 1; j <= terms && j <= s; ++j) {
    c = c * (s - j + 1) / j;
    total += c;
    if (total > (std::int64_t{1} << 40)) return total;
  }
  return total;
}

std::vector<std::vector<std::uint8_t>> all_relabelings(int n) {
  // For each permutation sigma of the coordinates, the induced map on masks.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint8_t>> out;
  const unsigned size = 1U << n;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::uint8_t> map(size);
    for (unsigned m = 0; m < size; ++m) {
      unsigned image = 0;
      for (int b = 0; b < n; ++b) {
        if (((m >> b) & 1U) != 0) image |= 1U << perm[static_cast<std::size_t>(b)];
      }
      map[m] = static_cast<std::uint8_t>(image);
    }
    out.push_back(std::move(map));
  }
  return out;
}

class UpsetSearch {
 public:
  using Visit = std::function<bool(Bits)>;

  UpsetSearch(const Lattice& lattice, int k, bool symmetry, Clock::time_point deadline)
      : lat_(lattice), k_(k), deadline_(deadline) {
    if (symmetry) relabelings_ = all_relabelings(lattice.n);
  }

  // Leaves with at most `max_size` members are handed to `visit`; it may
  // lower the bound through set_max_size.
  void run(std::int64_t max_size, Visit visit) {
    max_size_ = max_size;
    visit_ = std::move(visit);
    dfs(0, 0);
  }

  void set_max_size(std::int64_t s) { max_size_ = s; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  [[nodiscard]] bool aborted() const { return aborted_; }

 private:
  bool kwise_ok(Bits inc) const {
    if ((inc & 1U) != 0) return false;
    return (lat_.reach(lat_.minimal(inc), k_, true) & 1U) == 0;
  }

  // Each excluded mask needs at most k-1 potential members whose
  // intersection misses it.
  bool maximality_feasible(Bits potential, Bits exc) const {
    const Bits r = lat_.reach(lat_.minimal(potential), k_ - 1, false);
    const Bits blocked = lat_.down_closure(lat_.complements(r));
    return (exc & ~blocked) == 0;
  }

  // Prunes unless the partial family may still be the lexicographic leader
  // of its orbit: reading masks in ascending order, the leader has the
  // member wherever it first differs from a relabeled copy.
  bool lex_leader_possible(Bits inc, Bits exc) const {
    const Bits decided = inc | exc;
    for (const auto& map : relabelings_) {
      for (unsigned x = 0; x < lat_.size; ++x) {
        const unsigned y = map[x];
        if ((decided & bit_at(x)) == 0 || (decided & bit_at(y)) == 0) break;
        const bool a = (inc & bit_at(x)) != 0;
        const bool b = (inc & bit_at(y)) != 0;
        if (a == b) continue;
        if (b) return false;
        break;
      }
    }
    return true;
  }

  void dfs(Bits inc, Bits exc) {
    if (stop_) return;
    ++nodes_;
    if ((nodes_ & 1023U) == 0 && Clock::now() > deadline_) {
      aborted_ = true;
      stop_ = true;
      return;
    }
    if (popcount(inc) > max_size_) return;
    if (!kwise_ok(inc)) return;
    const Bits potential = lat_.full & ~exc;
    if (popcount(potential) < k_) return;
    if (!maximality_feasible(potential, exc)) return;
    if (!relabelings_.empty() && !lex_leader_possible(inc, exc)) return;

    const Bits undecided = lat_.full & ~(inc | exc);
    if (undecided == 0) {
      if (!visit_(inc)) stop_ = true;
      return;
    }
    const unsigned u = lowest(undecided);
    dfs(inc, exc | lat_.down[u]);
    dfs(inc | lat_.up[u], exc);
  }

  const Lattice& lat_;
  int k_;
  Clock::time_point deadline_;
  std::vector<std::vector<std::uint8_t>> relabelings_;
  std::int64_t max_size_ = 0;
  Visit visit_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool stop_ = false;
};

class WitnessSet {
 public:
  WitnessSet(int n, bool linked_reference) {
    if (linked_reference && n >= 2 && n <= kCanonicalLimit) {
      reference_ = canonical_form(linked_cubes(n, balanced_half(n)));
    }
  }

  void clear() {
    seen_.clear();
    witnesses_.clear();
  }

  void add(const SetFamily& family) {
    SetFamily canon = canonical_form(family);
    const auto words = canon.words();
    std::vector<std::uint64_t> key(words.begin(), words.end());
    if (!seen_.insert(std::move(key)).second) return;
    const bool match = reference_.has_value() && *reference_ == canon;
    witnesses_.push_back({std::move(canon), match});
  }

  [[nodiscard]] std::vector<SearchWitness> take() { return std::move(witnesses_); }
  [[nodiscard]] bool empty() const { return witnesses_.empty(); }

 private:
  std::optional<SetFamily> reference_;
  std::set<std::vector<std::uint64_t>> seen_;
  std::vector<SearchWitness> witnesses_;
};

// Families with fewer than k members, smallest size first. Returns the
// minimum size of a maximal one, or nullopt.
std::optional<std::int64_t> scan_small_families(const SearchConfig& cfg, Clock::time_point deadline,
                                                WitnessSet& witnesses, std::uint64_t& nodes, bool& aborted) {
  const int n = cfg.n;
  const unsigned universe = 1U << n;
  const auto top = static_cast<std::size_t>(std::min<std::int64_t>(cfg.k - 1, universe));
  std::vector<Mask> pick;
  for (std::size_t s = 0; s <= top; ++s) {
    bool found = false;
    pick.assign(s, 0);
    std::iota(pick.begin(), pick.end(), Mask{0});
    while (true) {
      ++nodes;
      if ((nodes & 1023U) == 0 && Clock::now() > deadline) {
        aborted = true;
        return found ? std::optional<std::int64_t>(static_cast<std::int64_t>(s)) : std::nullopt;
      }
      const SetFamily family = SetFamily::from_members(n, pick);
      if (is_k_wise_intersecting(family, cfg.k, cfg.mode) && is_maximal_k_wise(family, cfg.k, cfg.mode)) {
        found = true;
        witnesses.add(family);
        if (!cfg.enumerate_all) return static_cast<std::int64_t>(s);
      }
      // Next s-combination of [0, universe) in lexicographic order.
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == universe - s + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (found) return static_cast<std::int64_t>(s);
  }
  return std::nullopt;
}

}  // namespace

std::int64_t counting_lower_bound(int n, int k) {
  check_ground_size(n);
  require(k >= 2, ErrorKind::InvalidParameter, "k must be >= 2");
  const std::int64_t universe = std::int64_t{1} << n;
  for (std::int64_t s = k;; ++s) {
    if (universe - s <= binomial_sum(s, k - 1)) return s;
  }
}

SearchReport search_min(const SearchConfig& cfg) {
  check_ground_size(cfg.n, kSearchLimit);
  require(cfg.k >= 2, ErrorKind::InvalidParameter, "k must be >= 2, got " + std::to_string(cfg.k));
  require(cfg.budget_seconds > 0, ErrorKind::InvalidParameter, "budget must be positive");
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(cfg.budget_seconds));

  SearchReport report;
  WitnessSet witnesses(cfg.n, true);
  bool aborted = false;

  if (!cfg.nondegenerate) {
    const auto small = scan_small_families(cfg, deadline, witnesses, report.nodes, aborted);
    if (small) {
      report.f_value = small;
      report.witnesses = witnesses.take();
      report.optimal = !aborted;
      report.lower_bound = aborted ? 0 : *small;
      report.upper_bound = small;
      report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      return report;
    }
    if (aborted) {
      report.optimal = false;
      report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      return report;
    }
  }

  // Up-set regime: every maximal family with at least k members.
  const Lattice lattice(cfg.n);
  const std::int64_t floor_bound = counting_lower_bound(cfg.n, cfg.k);

  // Seed the incumbent with the maximal closure of balanced linked cubes.
  std::optional<SetFamily> seed;
  if (cfg.n >= 2) {
    const SetFamily base = linked_cubes(cfg.n, balanced_half(cfg.n));
    if (is_k_wise_intersecting(base, cfg.k, cfg.mode)) {
      SetFamily closed = maximal_closure(base, cfg.k, cfg.mode);
      if (closed.size() >= static_cast<std::size_t>(cfg.k)) seed = std::move(closed);
    }
  }
  std::int64_t incumbent = seed ? static_cast<std::int64_t>(seed->size()) : std::int64_t{1} << cfg.n;
  bool improved = false;

  UpsetSearch engine(lattice, cfg.k, cfg.symmetry, deadline);
  const std::int64_t initial_bound = cfg.enumerate_all ? incumbent : incumbent - 1;
  bool done_early = false;
  engine.run(initial_bound, [&](Bits inc) {
    const SetFamily family = to_family(inc, cfg.n);
    if (!is_maximal_k_wise(family, cfg.k, cfg.mode)) return true;
    const auto size = static_cast<std::int64_t>(family.size());
    if (size < incumbent || !improved) {
      if (size < incumbent) witnesses.clear();
      incumbent = std::min(incumbent, size);
      improved = true;
    }
    if (size == incumbent) witnesses.add(family);
    if (!cfg.enumerate_all) {
      engine.set_max_size(incumbent - 1);
      if (incumbent <= floor_bound) {
        done_early = true;
        return false;
      }
    } else {
      engine.set_max_size(incumbent);
    }
    return true;
  });
  aborted = engine.aborted();
  report.nodes += engine.nodes();
  (void)done_early;

  if (!improved && seed && static_cast<std::int64_t>(seed->size()) == incumbent) witnesses.add(*seed);
  if (improved || seed) {
    report.f_value = incumbent;
    report.upper_bound = incumbent;
  }
  report.witnesses = witnesses.take();
  report.optimal = !aborted;
  report.lower_bound = aborted ? floor_bound : report.f_value.value_or(floor_bound);
  if (aborted) report.f_value = report.upper_bound;
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

void for_each_maximal_upset(int n, int k, KwiseMode mode, const std::function<bool(const SetFamily&)>& visit) {
  check_ground_size(n, 6);
  require(k >= 2, ErrorKind::InvalidParameter, "k must be >= 2");
  const Lattice lattice(n);
  UpsetSearch engine(lattice, k, false, Clock::time_point::max());
  engine.run(std::int64_t{1} << n, [&](Bits inc) {
    const SetFamily family = to_family(inc, n);
    if (!is_maximal_k_wise(family, k, mode)) return true;
    return visit(family);
  });
}

}  // namespace kwise
