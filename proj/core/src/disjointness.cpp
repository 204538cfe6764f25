#include "kwise/disjointness.hpp"

#include <bit>
#include <random>
#include <sstream>
#include <string>

#include "kwise/error.hpp"

namespace kwise {
namespace {

void check_same_ground(const SetFamily& a, const SetFamily& b) {
  require(a.ground_size() == b.ground_size(), ErrorKind::GroundMismatch,
          "disjointness classes live on different ground sets");
}

Rational pow2_rational(int e) {
  require(e >= 0 && e <= 62, ErrorKind::InvalidParameter, "ell out of range: " + std::to_string(e));
  return Rational{std::int64_t{1} << e};
}

std::size_t count_subsets_of(const SetFamily& family, Mask top) {
  std::size_t count = 0;
  family.for_each([&](Mask m) { count += is_subset(m, top) ? 1 : 0; });
  return count;
}

Bipartization finish(const DisjointnessGraph& graph, std::vector<std::uint8_t> side, std::size_t cut) {
  Bipartization out;
  out.cut_edges = cut;
  out.deleted_edges = graph.edge_count() - cut;
  for (std::size_t v = 0; v < side.size(); ++v) {
    (side[v] == 0 ? out.x_class : out.y_class).push_back(graph.left()[v]);
  }
  out.side = std::move(side);
  return out;
}

Bipartization exact_bipartization(const DisjointnessGraph& graph) {
  const std::size_t n_vertices = graph.left().size();
  require(n_vertices <= kExactBipartizationLimit, ErrorKind::CapacityExceeded,
          "exact bipartization is limited to " + std::to_string(kExactBipartizationLimit) +
              " vertices, graph has " + std::to_string(n_vertices));
  if (n_vertices <= 1) return finish(graph, std::vector<std::uint8_t>(n_vertices, 0), 0);

  std::vector<std::uint32_t> adj(n_vertices, 0);
  for (std::size_t u = 0; u < n_vertices; ++u) {
    for (std::size_t v = 0; v < n_vertices; ++v) {
      if (graph.adjacent(u, v)) adj[u] |= std::uint32_t{1} << v;
    }
  }
  // Vertex 0 stays on side 0; a Gray code walks every cut of the rest, one
  // flip per step.
  const std::uint32_t all = (std::uint32_t{1} << n_vertices) - 1;
  std::uint32_t side_mask = 0;
  std::int64_t cut = 0;
  std::int64_t best_cut = 0;
  std::uint32_t best_mask = 0;
  const std::uint64_t steps = std::uint64_t{1} << (n_vertices - 1);
  for (std::uint64_t t = 1; t < steps; ++t) {
    const int v = std::countr_zero(t) + 1;
    const std::uint32_t bit = std::uint32_t{1} << v;
    const std::uint32_t same = (side_mask & bit) != 0 ? side_mask : (~side_mask & all);
    const int same_count = std::popcount(adj[static_cast<std::size_t>(v)] & same);
    const int other_count = std::popcount(adj[static_cast<std::size_t>(v)]) - same_count;
    cut += same_count - other_count;
    side_mask ^= bit;
    if (cut > best_cut) {
      best_cut = cut;
      best_mask = side_mask;
    }
  }
  std::vector<std::uint8_t> side(n_vertices);
  for (std::size_t v = 0; v < n_vertices; ++v) side[v] = static_cast<std::uint8_t>((best_mask >> v) & 1U);
  return finish(graph, std::move(side), static_cast<std::size_t>(best_cut));
}

Bipartization heuristic_bipartization(const DisjointnessGraph& graph, std::uint64_t budget,
                                      std::uint64_t seed) {
  const std::size_t n_vertices = graph.left().size();
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> side(n_vertices);
  for (auto& s : side) s = static_cast<std::uint8_t>(rng() & 1U);

  std::vector<std::vector<std::size_t>> neighbours(n_vertices);
  for (auto [u, v] : graph.edges()) {
    neighbours[u].push_back(v);
    neighbours[v].push_back(u);
  }
  // gain[v]: change in cut size if v switches sides.
  std::vector<std::int64_t> gain(n_vertices, 0);
  std::size_t cut = 0;
  for (std::size_t v = 0; v < n_vertices; ++v) {
    for (std::size_t u : neighbours[v]) {
      if (side[u] == side[v]) {
        ++gain[v];
      } else {
        --gain[v];
        if (u < v) ++cut;
      }
    }
  }
  for (std::uint64_t move = 0; move < budget; ++move) {
    std::size_t best = n_vertices;
    for (std::size_t v = 0; v < n_vertices; ++v) {
      if (gain[v] > 0 && (best == n_vertices || gain[v] > gain[best])) best = v;
    }
    if (best == n_vertices) break;  // local optimum
    cut += static_cast<std::size_t>(gain[best]);
    side[best] ^= 1U;
    gain[best] = -gain[best];
    for (std::size_t u : neighbours[best]) gain[u] += side[u] == side[best] ? 2 : -2;
  }
  return finish(graph, std::move(side), cut);
}

}  // namespace

DisjointnessGraph DisjointnessGraph::build(const SetFamily& family) {
  DisjointnessGraph g;
  g.n_ = family.ground_size();
  g.left_ = family.members();
  g.fill(true);
  return g;
}

DisjointnessGraph DisjointnessGraph::build_bipartite(const SetFamily& left, const SetFamily& right) {
  check_same_ground(left, right);
  DisjointnessGraph g;
  g.n_ = left.ground_size();
  g.bipartite_ = true;
  g.left_ = left.members();
  g.right_ = right.members();
  g.fill(false);
  return g;
}

void DisjointnessGraph::fill(bool skip_diagonal) {
  const auto& cols = right();
  stride_ = (cols.size() + 63) / 64;
  rows_.assign(left_.size() * stride_, 0);
  std::size_t ones = 0;
  for (std::size_t u = 0; u < left_.size(); ++u) {
    for (std::size_t v = 0; v < cols.size(); ++v) {
      if ((left_[u] & cols[v]) != 0 || (skip_diagonal && u == v)) continue;
      rows_[u * stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
      ++ones;
    }
  }
  edges_ = bipartite_ ? ones : ones / 2;
}

std::size_t DisjointnessGraph::degree(std::size_t u) const noexcept {
  std::size_t d = 0;
  for (std::size_t w = 0; w < stride_; ++w) d += static_cast<std::size_t>(std::popcount(rows_[u * stride_ + w]));
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> DisjointnessGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  const std::size_t cols = right().size();
  for (std::size_t u = 0; u < left_.size(); ++u) {
    for (std::size_t v = bipartite_ ? 0 : u + 1; v < cols; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string DisjointnessGraph::edge_list_text() const {
  std::ostringstream os;
  for (auto [u, v] : edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::int64_t count_e_n(const DisjointnessGraph& graph, int element) {
  check_element(element, graph.ground_size());
  const Mask bit = element_bit(element);
  std::int64_t count = 0;
  for (auto [u, v] : graph.edges()) {
    if (((graph.left()[u] | graph.right()[v]) & bit) != 0) ++count;
  }
  return count;
}

Rational f_xy(const Rational& x, const Rational& y) { return x + y - Rational{2} * x * y; }

StabilityStats stability_stats(const SetFamily& x, const SetFamily& y, int ell, int element,
                               const std::optional<Partition>& partition, const Rational& threshold) {
  check_same_ground(x, y);
  const int n = x.ground_size();
  check_element(element, n);
  const Rational scale = pow2_rational(ell);
  const auto nx = static_cast<std::int64_t>(x.size());
  const auto ny = static_cast<std::int64_t>(y.size());

  StabilityStats s;
  s.alpha = Rational{nx} / scale;
  s.beta = Rational{ny} / scale;
  for (int i = 1; i <= n; ++i) {
    const Rational xi = ratio_or_zero(static_cast<std::int64_t>(degree(x, i)), nx);
    const Rational yi = ratio_or_zero(static_cast<std::int64_t>(degree(y, i)), ny);
    s.x.push_back(xi);
    s.y.push_back(yi);
    if (xi >= threshold) s.threshold_x |= element_bit(i);
    if (yi >= threshold) s.threshold_y |= element_bit(i);
  }
  s.x_elem = s.x[static_cast<std::size_t>(element - 1)];
  s.y_elem = s.y[static_cast<std::size_t>(element - 1)];
  s.f_value = f_xy(s.x_elem, s.y_elem);

  const Mask bit = element_bit(element);
  const auto xm = x.members();
  const auto ym = y.members();
  for (Mask a : xm) {
    for (Mask b : ym) {
      if ((a & b) != 0) continue;
      ++s.e_total;
      if (((a | b) & bit) != 0) ++s.e_n;
    }
  }

  if (partition) {
    require(partition->ground_size() == n && partition->block_count() == 2, ErrorKind::InvalidParameter,
            "stability partition must have exactly two blocks over [n]");
    s.a = partition->blocks()[0];
    s.b = partition->blocks()[1];
  } else {
    s.a = s.threshold_x;
    s.b = s.threshold_y;
  }
  s.theta = ratio_or_zero(static_cast<std::int64_t>(count_subsets_of(x, s.a)), nx);
  s.phi = ratio_or_zero(static_cast<std::int64_t>(count_subsets_of(y, s.b)), ny);
  return s;
}

Bipartization min_bipartization(const DisjointnessGraph& graph, BipartizationMode mode, std::uint64_t budget,
                                std::uint64_t seed) {
  require(!graph.is_bipartite(), ErrorKind::InvalidParameter,
          "bipartization expects a unipartite disjointness graph");
  return mode == BipartizationMode::Exact ? exact_bipartization(graph)
                                          : heuristic_bipartization(graph, budget, seed);
}

PremiseReport audit_lemma_size_premises(const SetFamily& x, const SetFamily& y, int ell, int element,
                                        const Rational& slack) {
  check_same_ground(x, y);
  check_element(element, x.ground_size());
  require(slack >= Rational{0}, ErrorKind::InvalidParameter, "slack must be non-negative");
  const Rational scale = pow2_rational(ell);
  const auto plus_x = static_cast<std::int64_t>(degree(x, element));
  const auto plus_y = static_cast<std::int64_t>(degree(y, element));
  const auto size_x = static_cast<std::int64_t>(x.size());
  const auto size_y = static_cast<std::int64_t>(y.size());

  PremiseReport report;
  auto add = [&](std::string name, std::int64_t count, Rational target) {
    PremiseRatio r{std::move(name), Rational{count} / scale, target, false};
    const Rational gap = r.value >= target ? r.value - target : target - r.value;
    r.within = gap <= slack * target;
    report.ratios.push_back(std::move(r));
  };
  add("|X|/2^ell", size_x, Rational{3, 2});
  add("|Y|/2^ell", size_y, Rational{3, 2});
  add("|X_e^+|/2^ell", plus_x, Rational{1, 2});
  add("|Y_e^+|/2^ell", plus_y, Rational{1, 2});
  add("|X_e^-|/2^ell", size_x - plus_x, Rational{1});
  add("|Y_e^-|/2^ell", size_y - plus_y, Rational{1});
  report.all_within = true;
  for (const auto& r : report.ratios) report.all_within = report.all_within && r.within;
  return report;
}

}  // namespace kwise
