#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kwise/constructions.hpp"
#include "kwise/family.hpp"
#include "kwise/rational.hpp"

namespace kwise {

/// Graph whose vertices are family members (ascending mask order) and whose
/// edges join disjoint members. Unipartite graphs have no loops; bipartite
/// graphs join every left/right pair of disjoint masks, so a mask present on
/// both sides may be joined to itself (only the empty set qualifies).
class DisjointnessGraph {
 public:
  static DisjointnessGraph build(const SetFamily& family);
  static DisjointnessGraph build_bipartite(const SetFamily& left, const SetFamily& right);

  [[nodiscard]] bool is_bipartite() const noexcept { return bipartite_; }
  [[nodiscard]] int ground_size() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Mask>& left() const noexcept { return left_; }
  [[nodiscard]] const std::vector<Mask>& right() const noexcept { return bipartite_ ? right_ : left_; }

  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return ((rows_[u * stride_ + (v >> 6)] >> (v & 63)) & 1U) != 0;
  }
  [[nodiscard]] std::size_t degree(std::size_t u) const noexcept;

  /// Undirected edges for unipartite graphs, left/right pairs otherwise.
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_; }

  /// (u, v) index pairs; u < v in the unipartite case.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// One "u v" line per edge, indices into the ascending member order.
  [[nodiscard]] std::string edge_list_text() const;

 private:
  DisjointnessGraph() = default;
  void fill(bool skip_diagonal);

  int n_ = 0;
  bool bipartite_ = false;
  std::vector<Mask> left_;
  std::vector<Mask> right_;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> rows_;
  std::size_t edges_ = 0;
};

/// Edges whose two endpoints together contain the element (1-based). For a
/// unipartite graph every undirected edge counts once.
[[nodiscard]] std::int64_t count_e_n(const DisjointnessGraph& graph, int element);

/// x + y - 2xy.
[[nodiscard]] Rational f_xy(const Rational& x, const Rational& y);

struct StabilityStats {
  Rational alpha;              // |X| / 2^ell
  Rational beta;               // |Y| / 2^ell
  std::vector<Rational> x;     // x[i-1] = |X_i^+| / |X|
  std::vector<Rational> y;     // y[i-1] = |Y_i^+| / |Y|
  Rational x_elem;             // x at the audited element
  Rational y_elem;
  std::int64_t e_total = 0;    // edges of the bipartite disjointness graph G_{X,Y}
  std::int64_t e_n = 0;        // those whose union contains the element
  Mask threshold_x = 0;        // {i : x_i >= threshold}
  Mask threshold_y = 0;
  Mask a = 0;                  // sets used for theta / phi
  Mask b = 0;
  Rational theta;              // |X cap 2^A| / |X|
  Rational phi;                // |Y cap 2^B| / |Y|
  Rational f_value;            // f(x_elem, y_elem)
};

/// Statistics of a pair of classes (X, Y). When a two-block partition is
/// given it supplies (A, B); otherwise the threshold sets are used. Ratios
/// with an empty denominator are 0.
[[nodiscard]] StabilityStats stability_stats(const SetFamily& x, const SetFamily& y, int ell,
                                             int element,
                                             const std::optional<Partition>& partition = std::nullopt,
                                             const Rational& threshold = Rational{1, 3});

enum class BipartizationMode { Exact, Heuristic };

inline constexpr std::size_t kExactBipartizationLimit = 24;

struct Bipartization {
  std::size_t deleted_edges = 0;
  std::size_t cut_edges = 0;
  std::vector<std::uint8_t> side;  // per vertex, 0 = X class, 1 = Y class
  std::vector<Mask> x_class;
  std::vector<Mask> y_class;
};

/// Fewest edge deletions that leave the unipartite graph bipartite, i.e.
/// e - maxcut. Exact mode scans every cut (at most 24 vertices); heuristic
/// mode runs seeded single-vertex-flip local search for at most `budget` moves
/// and may overshoot the optimum.
[[nodiscard]] Bipartization min_bipartization(const DisjointnessGraph& graph, BipartizationMode mode,
                                              std::uint64_t budget = 100000, std::uint64_t seed = 0);

struct PremiseRatio {
  std::string name;
  Rational value;
  Rational target;
  bool within = false;
};

struct PremiseReport {
  std::vector<PremiseRatio> ratios;
  bool all_within = false;
};

/// Size profile of (X, Y) normalised by 2^ell against the targets 3/2 (|X|,
/// |Y|), 1/2 (|X_e^+|, |Y_e^+|) and 1 (|X_e^-|, |Y_e^-|). A ratio passes when
/// |value - target| <= slack * target.
[[nodiscard]] PremiseReport audit_lemma_size_premises(const SetFamily& x, const SetFamily& y, int ell,
                                                      int element, const Rational& slack);

}  // namespace kwise
