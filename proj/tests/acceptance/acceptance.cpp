// Acceptance gate: one PASS/FAIL line per criterion. Exit status 0 iff all pass.
// Runtime limits below are part of each verdict; KWISE_PROBE_BUDGET (seconds)
// overrides the budget of the best-effort n = 7 search probe.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kwise/canonical.hpp"
#include "kwise/cli.hpp"
#include "kwise/constructions.hpp"
#include "kwise/cube_audit.hpp"
#include "kwise/disjointness.hpp"
#include "kwise/generator.hpp"
#include "kwise/intersecting.hpp"
#include "kwise/search.hpp"
#include "oracle/naive.hpp"

using namespace kwise;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Wall-clock limits, seconds.
constexpr double kLimitSizeLaw = 5;
constexpr double kLimitThreeWise = 30;
constexpr double kLimitThreshold = 120;
constexpr double kLimitOracle = 600;
constexpr double kLimitCoverage = 60;
constexpr double kLimitBipartization = 120;
constexpr double kDefaultProbeBudget = 3600;

constexpr std::uint64_t kSeed = 20240531;

const fs::path kOutDir = "acceptance_out";

struct Verdict {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = "first failure: " + what;
      pass = false;
    }
  }
};

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string timing = seconds_text(took);
  if (limit > 0) {
    timing += " / limit " + seconds_text(limit);
    if (took >= limit) v.expect(false, "runtime over limit");
  }
  if (!v.pass) ++failures;
  std::cout << "criterion " << id << " " << (v.pass ? "PASS" : "FAIL") << "  " << title << "  [" << timing
            << "]";
  if (!v.detail.empty()) std::cout << "  " << v.detail;
  std::cout << std::endl;
}

int run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  if (code != cli::kExitOk) std::cerr << err.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

// 1 -------------------------------------------------------------------------
Verdict size_law() {
  Verdict v;
  for (int n = 2; n <= 26; ++n) {
    const std::int64_t expected = pow2((n + 1) / 2) + pow2(n / 2) - 3;
    for (int size : {n / 2, (n + 1) / 2}) {
      const Mask s = full_mask(size);
      v.expect(static_cast<std::int64_t>(linked_cubes(n, s).size()) == expected,
               "n=" + std::to_string(n) + " |S|=" + std::to_string(size));
    }
  }
  return v;
}

// 2 -------------------------------------------------------------------------
Verdict three_wise() {
  Verdict v;
  std::size_t checked = 0;
  for (int n = 2; n <= 10; ++n) {
    for (Mask s = 1; s < full_mask(n); ++s) {
      v.expect(is_k_wise_intersecting(linked_cubes(n, s), 3, KwiseMode::Distinct),
               "n=" + std::to_string(n) + " S=" + format_mask(s));
      ++checked;
    }
  }
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(checked) + " (n,S) pairs";
  return v;
}

// 3 -------------------------------------------------------------------------
Verdict threshold() {
  Verdict v;
  const fs::path ledger = kOutDir / "threshold.jsonl";
  fs::remove(ledger);
  v.expect(run_cli({"audit", "threshold", "--from", "3", "--to", "14", "--k", "3", "--out", ledger.string(),
                    "--no-timestamp"}) == cli::kExitOk,
           "CLI threshold audit");
  const json record = json::parse(slurp(ledger));
  const json& verdicts = record["result"]["verdicts"];
  v.expect(verdicts.size() == 12, "12 verdicts");

  // Brute force at n = 3: try every non-member.
  const SetFamily f3 = linked_cubes(3, balanced_half(3));
  const auto m3 = f3.members();
  v.expect(!oracle::maximal(oracle::Masks(m3.begin(), m3.end()), 3, 3, false), "n=3 oracle says not maximal");

  int stable_from = -1;
  for (const json& item : verdicts) {
    const int n = item["n"];
    const bool maximal = item["maximal"];
    const SetFamily f = linked_cubes(n, balanced_half(n));
    v.expect(maximal == is_maximal_k_wise(f, 3), "ledger verdict matches checker at n=" + std::to_string(n));
    if (n == 3) v.expect(!maximal, "n=3 verdict false");
    if (!maximal) {
      stable_from = -1;
      v.expect(item.contains("addable") && item["addable_revalidated"] == true,
               "addable witness at n=" + std::to_string(n));
      const auto w = addable_witness(f, 3);
      v.expect(w.has_value(), "checker witness at n=" + std::to_string(n));
      if (w) {
        SetFamily g = f;
        g.insert(*w);
        v.expect(!f.contains(*w) && is_k_wise_intersecting(g, 3), "witness revalidated at n=" + std::to_string(n));
        v.expect(item["addable"] == format_mask(*w), "ledger witness at n=" + std::to_string(n));
      }
    } else if (stable_from < 0) {
      stable_from = n;
    }
  }
  v.expect(record["result"]["stable_from"] == (stable_from < 0 ? json() : json(stable_from)), "stable_from");
  v.detail += (v.detail.empty() ? "" : "; ") + std::string("verdicts true from n=") +
              (stable_from < 0 ? "none" : std::to_string(stable_from)) + " through 14";
  return v;
}

// 4 -------------------------------------------------------------------------
SearchReport search(int n, int k, KwiseMode mode, bool nondegenerate, bool all = false, bool symmetry = true,
                    double budget = 600) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.mode = mode;
  cfg.nondegenerate = nondegenerate;
  cfg.enumerate_all = all;
  cfg.symmetry = symmetry;
  cfg.budget_seconds = budget;
  return search_min(cfg);
}

std::optional<std::int64_t> widen(std::optional<int> v) {
  return v ? std::optional<std::int64_t>(*v) : std::nullopt;
}

Verdict oracle_equivalence() {
  Verdict v;
  int cases = 0;
  const auto compare = [&](int n, int k, bool rep, const oracle::Minimum& expected) {
    const KwiseMode mode = rep ? KwiseMode::WithRepetition : KwiseMode::Distinct;
    const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + std::string(to_string(mode));
    const SearchReport all = search(n, k, mode, false);
    const SearchReport nd = search(n, k, mode, true);
    v.expect(all.optimal && all.f_value == widen(expected.all), tag + " all");
    v.expect(nd.optimal && nd.f_value == widen(expected.nondegenerate), tag + " nondegenerate");
    cases += 2;
  };
  for (int n = 1; n <= 4; ++n) {
    for (int k = 2; k <= 4; ++k) {
      for (bool rep : {false, true}) compare(n, k, rep, oracle::min_all_families(n, k, rep));
    }
  }
  compare(5, 3, false, oracle::min_small_and_upsets(5, 3, false));
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(cases) + " cases";
  return v;
}

// 5 -------------------------------------------------------------------------
std::string probe(Verdict& v, int n, double budget) {
  const SearchReport on = search(n, 3, KwiseMode::Distinct, true, true, true, budget);
  std::set<std::string> forms;
  bool all_linked = !on.witnesses.empty();
  for (const auto& w : on.witnesses) {
    v.expect(w.family == canonical_form(w.family), "witness is canonical");
    v.expect(is_maximal_k_wise(w.family, 3), "witness is maximal 3-wise");
    if (on.optimal) v.expect(static_cast<std::int64_t>(w.family.size()) == on.f_value, "witness size");
    v.expect(w.matches_linked_cubes == isomorphic(w.family, linked_cubes(n, balanced_half(n))),
             "linked-cubes flag");
    all_linked = all_linked && w.matches_linked_cubes;
    forms.insert(to_hex(w.family));
  }
  v.expect(forms.size() == on.witnesses.size(), "no duplicate canonical forms");
  for (std::size_t i = 0; i < on.witnesses.size(); ++i) {
    for (std::size_t j = i + 1; j < on.witnesses.size(); ++j) {
      v.expect(!isomorphic(on.witnesses[i].family, on.witnesses[j].family), "witnesses pairwise non-isomorphic");
    }
  }
  std::ostringstream text;
  text << "n=" << n << ": f=" << (on.f_value ? std::to_string(*on.f_value) : "none")
       << (on.optimal ? "" : " (budget exhausted, bounds " + std::to_string(on.lower_bound) + ".." +
                                 (on.upper_bound ? std::to_string(*on.upper_bound) : "?") + ")")
       << ", " << on.witnesses.size() << " witness class(es), all balanced linked cubes: "
       << (all_linked ? "yes" : "no");
  return text.str();
}

Verdict witness_probe() {
  Verdict v;
  const std::string five = probe(v, 5, 600);
  // Exact dedup: the witness classes do not depend on symmetry pruning.
  const SearchReport on = search(5, 3, KwiseMode::Distinct, true, true, true);
  const SearchReport off = search(5, 3, KwiseMode::Distinct, true, true, false);
  std::set<std::string> a;
  std::set<std::string> b;
  for (const auto& w : on.witnesses) a.insert(to_hex(w.family));
  for (const auto& w : off.witnesses) b.insert(to_hex(w.family));
  v.expect(on.optimal && off.optimal && a == b && on.f_value == off.f_value, "symmetry on/off agree at n=5");

  double budget = kDefaultProbeBudget;
  if (const char* env = std::getenv("KWISE_PROBE_BUDGET")) budget = std::strtod(env, nullptr);
  const std::string seven = budget > 0 ? probe(v, 7, budget) : "n=7: skipped (budget 0)";
  v.detail += (v.detail.empty() ? "" : "; ") + five + "; " + seven;
  return v;
}

// 6 -------------------------------------------------------------------------
Verdict generator_exactness() {
  Verdict v;
  for (int n = 1; n <= 16; ++n) {
    const std::size_t universe = std::size_t{1} << n;
    for (Mask s = 0; s <= full_mask(n); ++s) {
      if (coverage(pair_of_cubes(n, s), 2).count != universe) {
        v.expect(false, "pair of cubes n=" + std::to_string(n) + " S=" + format_mask(s));
      }
    }
    for (int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      v.expect(coverage(series_of_cubes(Partition::balanced(n, k)), k).count == universe,
               "series n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return v;
}

// 7 -------------------------------------------------------------------------
Verdict correspondence() {
  Verdict v;
  std::size_t families = 0;
  for (int n = 1; n <= 5; ++n) {
    for_each_maximal_upset(n, 3, KwiseMode::Distinct, [&](const SetFamily& f) {
      v.expect(f.size() >= 3 && verify_maximal_generator_correspondence(f, 3).holds,
               "maximal family at n=" + std::to_string(n));
      ++families;
      return true;
    });
  }
  std::mt19937_64 rng(kSeed);
  std::size_t closures = 0;
  for (int n = 6; n <= 10; ++n) {
    std::uniform_int_distribution<Mask> pick(0, full_mask(n));
    for (int rep = 0; rep < 20; ++rep) {
      SetFamily seed(n);
      do {
        seed = SetFamily(n);
        for (int i = 0; i < 3; ++i) seed.insert(pick(rng) | pick(rng));
      } while (!is_k_wise_intersecting(seed, 3));
      const SetFamily f = maximal_closure(seed, 3);
      v.expect(f.size() >= 3 && verify_maximal_generator_correspondence(f, 3).holds,
               "closure at n=" + std::to_string(n));
      ++closures;
    }
  }
  // Below k members the correspondence can fail: {emptyset, [2]} is maximal
  // for k = 3 only vacuously.
  const CorrespondenceCheck tiny = verify_maximal_generator_correspondence(SetFamily::from_members(2, {0, 3}), 3);
  v.expect(!tiny.holds && !tiny.violations.empty(), "violation in the |F| < k regime");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(families) + " exhaustive families, " +
              std::to_string(closures) + " closures; |F|<k example has " + std::to_string(tiny.violations.size()) +
              " violation(s)";
  return v;
}

// 8 -------------------------------------------------------------------------
Verdict f_maximum() {
  Verdict v;
  Rational best{-1};
  std::vector<std::pair<int, int>> argmax;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const Rational value = f_xy(Rational{i, 300}, Rational{j, 300});
      if (best < value) {
        best = value;
        argmax.clear();
      }
      if (value == best) argmax.emplace_back(i, j);
    }
  }
  v.expect(best == Rational{4, 9}, "maximum is 4/9, got " + best.to_string());
  v.expect(argmax == std::vector<std::pair<int, int>>{{100, 100}}, "unique argmax at (1/3, 1/3)");
  return v;
}

// 9 -------------------------------------------------------------------------
Verdict bipartization() {
  Verdict v;
  std::mt19937_64 rng(kSeed + 9);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 4 + rep % 3;
    std::uniform_int_distribution<Mask> pick(0, full_mask(n));
    const std::size_t size = std::uniform_int_distribution<std::size_t>(2, 14)(rng);
    SetFamily h(n);
    while (h.size() < size) h.insert(pick(rng) & pick(rng));
    const auto g = DisjointnessGraph::build(h);
    std::vector<std::vector<bool>> adj(h.size(), std::vector<bool>(h.size(), false));
    for (auto [a, b] : g.edges()) adj[a][b] = adj[b][a] = true;
    const Bipartization exact = min_bipartization(g, BipartizationMode::Exact);
    const Bipartization heur = min_bipartization(g, BipartizationMode::Heuristic, 100000, kSeed + rep);
    v.expect(exact.deleted_edges == g.edge_count() - oracle::brute_maxcut(adj), "exact = e - maxcut");
    v.expect(heur.deleted_edges >= exact.deleted_edges, "heuristic never beats exact");
  }
  return v;
}

// 10 ------------------------------------------------------------------------
Verdict cube_audit() {
  Verdict v;
  const int ell = 4;
  const Mask s = full_mask(ell);
  const SetFamily f = linked_cubes(9, s);
  const ClaimAudit a = audit_claim_counts(f, s, Rational{1, 8});
  const std::int64_t p = pow2(ell);
  v.expect(a.hypotheses_met, "hypotheses met");
  v.expect(a.family_size == 3 * p - 3 && a.family_size == 45, "|F| = 45");
  v.expect(a.chain_lower == pow2(2 * ell + 1) - (3 * p - 1) - 45, "chain lower value");
  v.expect(a.cube_bound == pow2(2 * ell + 1) - 6 * p + 4 && a.cube_bound == (p - 2) * (2 * p - 2), "cube bound");
  v.expect(a.uncovered_count == 420 && a.chain_lower == 420 && a.cube_bound == 420, "all equal 420");
  v.expect(a.chain_holds && a.injection_holds && a.cube_bound_holds, "inequalities hold");
  v.expect(a.iff_applicable && a.g3_empty && a.cube_bound_tight, "extremal: G3 empty and equality");

  // Both directions on constructed instances with |G| = 3 2^ell - 3.
  for (int n : {9, 11}) {
    const int l = (n - 1) / 2;
    const Mask sl = full_mask(l);
    SetFamily g = pair_of_cubes(n, sl);
    g.erase(sl);
    g.erase(complement(sl, n));
    const ClaimAudit eq = audit_claim_counts(complement_family(g), sl, Rational{1, 8});
    v.expect(eq.iff_applicable && eq.g3_empty && eq.cube_bound_tight, "G3 empty gives equality, n=" + std::to_string(n));
    g.erase(Mask{1} << l);
    g.insert(1U | (Mask{1} << l));
    const ClaimAudit strict = audit_claim_counts(complement_family(g), sl, Rational{1, 8});
    v.expect(strict.iff_applicable && !strict.g3_empty && !strict.cube_bound_tight,
             "G3 nonempty gives strict inequality, n=" + std::to_string(n));
  }
  v.detail += (v.detail.empty() ? "" : "; ") + std::string("uncovered=") + std::to_string(a.uncovered_count) +
              " chain_lower=" + std::to_string(a.chain_lower) + " cube_bound=" + std::to_string(a.cube_bound);
  return v;
}

// 11 ------------------------------------------------------------------------
std::vector<std::vector<std::string>> test_ledger_commands() {
  const std::string lc7 = to_hex(linked_cubes(7, 0b111));
  const std::string small = to_hex(SetFamily::from_members(5, {0b00011, 0b01100, 0b10001, 0b00110, 0b11000}));
  return {
      {"construct", "linked-cubes", "--n", "9"},
      {"construct", "pair-of-cubes", "--n", "6", "--s", "1,2,3"},
      {"construct", "series-of-cubes", "--n", "12", "--k", "4"},
      {"construct", "formulas", "--n", "12", "--k", "4"},
      {"check", "--n", "7", "--family", lc7},
      {"closure", "--n", "5", "--family", to_hex(SetFamily::from_members(5, {0b00111, 0b01110, 0b11100})), "--k",
       "2"},
      {"gen-coverage", "--n", "6", "--family", to_hex(pair_of_cubes(6, 0b111)), "--k", "2", "--eps", "0"},
      {"disjointness", "--n", "5", "--family", small, "--bipartize", "heuristic"},
      {"disjointness", "--n", "5", "--family", small, "--bipartize", "exact"},
      {"stats", "--n", "5", "--family", small, "--family2", small, "--ell", "2", "--elem", "1"},
      {"search-min", "--n", "4", "--k", "3"},
      {"search-min", "--n", "5", "--k", "3", "--nondegenerate", "--all"},
      {"audit", "claims", "--n", "9", "--family", to_hex(linked_cubes(9, 0b1111)), "--s", "1,2,3,4", "--eps",
       "1/8"},
      {"audit", "threshold", "--from", "3", "--to", "10"},
  };
}

std::string run_ledger(const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path ledger = dir / "ledger.jsonl";
  for (auto args : test_ledger_commands()) {
    for (const char* extra : {"--seed", "7", "--no-timestamp", "--out"}) args.emplace_back(extra);
    args.push_back(ledger.string());
    if (run_cli(args) != cli::kExitOk) return {};
  }
  if (run_cli({"report", "--ledger", ledger.string(), "--dir", dir.string(), "--out", (dir / "report.jsonl").string(),
               "--no-timestamp"}) != cli::kExitOk) {
    return {};
  }
  std::string all;
  for (const char* name : {"ledger.jsonl", "f_table.csv", "constructions.csv", "threshold.csv"}) {
    all += slurp(dir / name);
  }
  return all;
}

Verdict determinism() {
  Verdict v;
  const std::string a = run_ledger(kOutDir / "ledger_a");
  const std::string b = run_ledger(kOutDir / "ledger_b");
  v.expect(!a.empty(), "ledger produced");
  v.expect(a == b, "byte-identical runs");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(a.size()) + " bytes compared";
  return v;
}

}  // namespace

int main() {
  fs::create_directories(kOutDir);
  criterion(1, "linked-cubes size law, n = 2..26", kLimitSizeLaw, size_law);
  criterion(2, "linked cubes are 3-wise intersecting, n <= 10", kLimitThreeWise, three_wise);
  criterion(3, "maximality threshold of balanced linked cubes, n = 3..14", kLimitThreshold, threshold);
  criterion(4, "search_min equals the brute-force oracle", kLimitOracle, oracle_equivalence);
  criterion(5, "minimum-witness probe, n = 5 and n = 7 (best effort)", 0, witness_probe);
  criterion(6, "generator exactness, n <= 16", kLimitCoverage, generator_exactness);
  criterion(7, "maximal family / generator correspondence", 0, correspondence);
  criterion(8, "f(x, y) grid maximum", 0, f_maximum);
  criterion(9, "exact bipartization against brute-force max-cut", kLimitBipartization, bipartization);
  criterion(10, "cube audit at n = 9 and the equality characterization", 0, cube_audit);
  criterion(11, "ledger determinism", 0, determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
