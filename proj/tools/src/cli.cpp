#include "kwise/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "kwise/canonical.hpp"
#include "kwise/constructions.hpp"
#include "kwise/cube_audit.hpp"
#include "kwise/disjointness.hpp"
#include "kwise/error.hpp"
#include "kwise/generator.hpp"
#include "kwise/intersecting.hpp"
#include "kwise/search.hpp"
#include "ledger.hpp"
#include "report.hpp"

namespace kwise::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  int n = 0;
  int k = 3;
  std::string mode = "distinct";
  std::string family;
  std::string family2;
  std::string s;
  std::string partition;
  std::string eps;
  std::string slack = "1/10";
  std::string threshold = "1/3";
  std::string c = "1";
  std::string d = "1";
  double budget = 60.0;
  std::string out;
  std::uint64_t seed = 0;
  bool no_timestamp = false;
  int ell = -1;
  int elem = 0;
  std::string bipartize;
  std::uint64_t moves = 100000;
  std::string edges;
  bool all = false;
  bool no_symmetry = false;
  bool nondegenerate = false;
  int from = 3;
  int to = 14;
  std::string ledger;
  std::string dir = ".";
  int sample = 8;
};

// Outcome of a command: the ledger payload plus the params that identify it.
struct Outcome {
  std::string command;
  json params;
  json result;
};

void need(bool present, const std::string& flag) {
  if (!present) throw CLI::RequiredError(flag);
}

KwiseMode mode_of(const Options& o) { return parse_mode(o.mode); }

SetFamily family_of(const Options& o, const std::string& arg, const std::string& flag) {
  need(o.n > 0, "--n");
  need(!arg.empty(), flag);
  check_ground_size(o.n, kMaxFamilyBits);
  return read_family_arg(o.n, arg);
}

Mask s_of(const Options& o) {
  need(!o.s.empty(), "--s");
  return parse_element_list(o.s, o.n);
}

json mask_json(Mask m) { return format_mask(m); }

json masks_json(const std::vector<Mask>& masks) {
  json out = json::array();
  for (Mask m : masks) out.push_back(format_mask(m));
  return out;
}

json rational_json(const Rational& r) { return r.to_string(); }

class Runner {
 public:
  Runner(const Options& o, fs::path sidecar_dir) : o_(o), sidecar_dir_(std::move(sidecar_dir)) {}

  json family(const SetFamily& f) const { return family_to_json(f, sidecar_dir_); }

  Outcome check() const {
    const SetFamily f = family_of(o_, o_.family, "--family");
    const KwiseMode mode = mode_of(o_);
    json result = {{"n", o_.n}, {"k", o_.k}, {"mode", to_string(mode)}, {"size", f.size()}};
    const bool kwise = is_k_wise_intersecting(f, o_.k, mode);
    result["kwise"] = kwise;
    result["up_closed"] = is_up_closed(f);
    if (kwise) {
      const auto witness = addable_witness(f, o_.k, mode);
      result["maximal"] = !witness.has_value();
      result["addable"] = witness ? mask_json(*witness) : json();
    } else {
      result["maximal"] = false;
      result["addable"] = json();
    }
    return {"check", base_params(true), result};
  }

  Outcome closure() const {
    const SetFamily f = family_of(o_, o_.family, "--family");
    const KwiseMode mode = mode_of(o_);
    const SetFamily closed = maximal_closure(f, o_.k, mode);
    json result = {{"n", o_.n},
                   {"k", o_.k},
                   {"mode", to_string(mode)},
                   {"input_size", f.size()},
                   {"size", closed.size()},
                   {"family", family(closed)},
                   {"maximal", is_maximal_k_wise(closed, o_.k, mode)},
                   {"up_closed", is_up_closed(closed)}};
    return {"closure", base_params(true), result};
  }

  Outcome construct(const std::string& kind) const {
    need(o_.n > 0, "--n");
    json params = {{"kind", kind}, {"n", o_.n}};
    json result = {{"kind", kind}, {"n", o_.n}};
    if (kind == "formulas") {
      params["k"] = o_.k;
      params["c"] = o_.c;
      params["d"] = o_.d;
      result["k"] = o_.k;
      const auto eval = [&](const char* name, const std::function<json()>& fn) {
        try {
          result[name] = fn();
        } catch (const Error& e) {
          result[name] = json();
          result[std::string(name) + "_error"] = e.what();
        }
      };
      eval("balanced_linked_cubes_size", [&] { return json(balanced_linked_cubes_size(o_.n)); });
      eval("balanced_series_size", [&] { return json(balanced_series_size(o_.n, o_.k)); });
      eval("series_k_minus_one_size", [&] { return json(series_k_minus_one_size(o_.n, o_.k)); });
      eval("janzer_size", [&] { return json(janzer_size(o_.n, o_.k)); });
      eval("bound_curves", [&] {
        const auto curves = f_nk_bound_curves(o_.n, o_.k, Rational::parse(o_.c), Rational::parse(o_.d));
        return json{{"lower", rational_json(curves.lower)}, {"upper", rational_json(curves.upper)}};
      });
      return {"construct", params, result};
    }

    check_ground_size(o_.n, kMaxFamilyBits);
    SetFamily f(o_.n);
    json formula;
    if (kind == "linked-cubes" || kind == "pair-of-cubes") {
      const Mask s = o_.s.empty() ? balanced_half(o_.n) : s_of(o_);
      params["s"] = format_mask(s);
      const std::int64_t a = std::int64_t{1} << cardinality(s);
      const std::int64_t b = std::int64_t{1} << (o_.n - cardinality(s));
      if (kind == "linked-cubes") {
        f = linked_cubes(o_.n, s);
        formula = a + b - 3;
      } else {
        f = pair_of_cubes(o_.n, s);
        formula = a + b - 1;
      }
    } else if (kind == "series-of-cubes") {
      const Partition p = o_.partition.empty() ? Partition::balanced(o_.n, o_.k) : Partition::parse(o_.n, o_.partition);
      std::string text;
      for (Mask block : p.blocks()) {
        if (!text.empty()) text += '|';
        const auto elems = elements_of(block);
        for (std::size_t i = 0; i < elems.size(); ++i) text += (i ? "," : "") + std::to_string(elems[i]);
      }
      params["partition"] = text;
      f = series_of_cubes(p);
      const int blocks = static_cast<int>(p.block_count());
      if (o_.n % blocks == 0) formula = balanced_series_size(o_.n, blocks);
    } else {
      fail(ErrorKind::Parse, "unknown construction: " + kind);
    }
    result["size"] = f.size();
    result["formula_size"] = formula;
    result["family"] = family(f);
    return {"construct", params, result};
  }

  Outcome gen_coverage() const {
    const SetFamily g = family_of(o_, o_.family, "--family");
    const Coverage cov = coverage(g, o_.k);
    const std::uint64_t universe = g.universe_size();
    std::vector<Mask> uncovered;
    for (std::uint64_t m = 0; m < universe && static_cast<int>(uncovered.size()) < o_.sample; ++m) {
      if (!cov.covered.contains(static_cast<Mask>(m))) uncovered.push_back(static_cast<Mask>(m));
    }
    json params = base_params(false);
    params["sample"] = o_.sample;
    json result = {{"n", o_.n},
                   {"k", o_.k},
                   {"count", cov.count},
                   {"fraction", rational_json(Rational(static_cast<std::int64_t>(cov.count),
                                                       static_cast<std::int64_t>(universe)))},
                   {"uncovered_sample", masks_json(uncovered)}};
    if (!o_.eps.empty()) {
      params["eps"] = o_.eps;
      result["generator"] = is_generator(g, o_.k, Rational::parse(o_.eps));
    }
    return {"gen-coverage", params, result};
  }

  Outcome disjointness() const {
    const SetFamily h = family_of(o_, o_.family, "--family");
    json params = {{"n", o_.n}, {"family", o_.family}};
    json result = {{"n", o_.n}};
    std::optional<DisjointnessGraph> graph;
    if (!o_.family2.empty()) {
      params["family2"] = o_.family2;
      graph = DisjointnessGraph::build_bipartite(h, family_of(o_, o_.family2, "--family2"));
      result["bipartite"] = true;
      result["left"] = graph->left().size();
      result["right"] = graph->right().size();
    } else {
      graph = DisjointnessGraph::build(h);
      result["bipartite"] = false;
      result["vertices"] = graph->left().size();
    }
    result["edges"] = graph->edge_count();
    if (o_.elem > 0) {
      params["elem"] = o_.elem;
      result["e_elem"] = count_e_n(*graph, o_.elem);
    }
    if (!o_.bipartize.empty()) {
      need(!graph->is_bipartite(), "a single --family (bipartization needs a unipartite graph)");
      const BipartizationMode mode =
          o_.bipartize == "exact"       ? BipartizationMode::Exact
          : o_.bipartize == "heuristic" ? BipartizationMode::Heuristic
                                        : (fail(ErrorKind::Parse, "--bipartize must be exact or heuristic"),
                                           BipartizationMode::Exact);
      params["bipartize"] = o_.bipartize;
      if (mode == BipartizationMode::Heuristic) params["moves"] = o_.moves;
      const Bipartization b = min_bipartization(*graph, mode, o_.moves, o_.seed);
      result["deleted_edges"] = b.deleted_edges;
      result["cut_edges"] = b.cut_edges;
      result["x_class"] = family(SetFamily::from_members(o_.n, b.x_class));
      result["y_class"] = family(SetFamily::from_members(o_.n, b.y_class));
    }
    if (!o_.edges.empty()) {
      std::ofstream file(o_.edges, std::ios::binary | std::ios::trunc);
      file << graph->edge_list_text();
      require(static_cast<bool>(file), ErrorKind::InvalidParameter, "cannot write " + o_.edges);
      result["edge_list"] = o_.edges;
    }
    return {"disjointness", params, result};
  }

  Outcome stats() const {
    const SetFamily x = family_of(o_, o_.family, "--family");
    const SetFamily y = family_of(o_, o_.family2, "--family2");
    need(o_.ell >= 0, "--ell");
    need(o_.elem > 0, "--elem");
    std::optional<Partition> p;
    json params = {{"n", o_.n}, {"family", o_.family}, {"family2", o_.family2}, {"ell", o_.ell},
                   {"elem", o_.elem}, {"threshold", o_.threshold}};
    if (!o_.partition.empty()) {
      p = Partition::parse(o_.n, o_.partition);
      params["partition"] = o_.partition;
    }
    const StabilityStats st = stability_stats(x, y, o_.ell, o_.elem, p, Rational::parse(o_.threshold));
    json xs = json::array();
    json ys = json::array();
    for (const auto& v : st.x) xs.push_back(rational_json(v));
    for (const auto& v : st.y) ys.push_back(rational_json(v));
    json result = {{"alpha", rational_json(st.alpha)},
                   {"beta", rational_json(st.beta)},
                   {"x", xs},
                   {"y", ys},
                   {"x_elem", rational_json(st.x_elem)},
                   {"y_elem", rational_json(st.y_elem)},
                   {"e_total", st.e_total},
                   {"e_elem", st.e_n},
                   {"threshold_x", mask_json(st.threshold_x)},
                   {"threshold_y", mask_json(st.threshold_y)},
                   {"a", mask_json(st.a)},
                   {"b", mask_json(st.b)},
                   {"theta", rational_json(st.theta)},
                   {"phi", rational_json(st.phi)},
                   {"f_xy", rational_json(st.f_value)}};
    return {"stats", params, result};
  }

  Outcome search_min_cmd() const {
    need(o_.n > 0, "--n");
    SearchConfig cfg;
    cfg.n = o_.n;
    cfg.k = o_.k;
    cfg.mode = mode_of(o_);
    cfg.budget_seconds = o_.budget;
    cfg.symmetry = !o_.no_symmetry;
    cfg.enumerate_all = o_.all;
    cfg.nondegenerate = o_.nondegenerate;
    const SearchReport r = search_min(cfg);

    json params = {{"n", o_.n},           {"k", o_.k},         {"mode", to_string(cfg.mode)},
                   {"budget", o_.budget}, {"all", o_.all},     {"symmetry", cfg.symmetry},
                   {"nondegenerate", o_.nondegenerate}};
    json witnesses = json::array();
    json matches = json::array();
    for (const auto& w : r.witnesses) {
      witnesses.push_back(to_hex(w.family));
      matches.push_back(w.matches_linked_cubes);
    }
    json result = {{"n", o_.n},
                   {"k", o_.k},
                   {"mode", to_string(cfg.mode)},
                   {"regime", o_.nondegenerate ? "nondegenerate" : "all"},
                   {"f", r.f_value ? json(*r.f_value) : json()},
                   {"witnesses", witnesses},
                   {"matches_linked_cubes", matches},
                   {"nodes", r.nodes},
                   {"optimal", r.optimal},
                   {"lower_bound", r.lower_bound},
                   {"upper_bound", r.upper_bound ? json(*r.upper_bound) : json()}};
    if (!o_.no_timestamp) result["seconds"] = r.seconds;
    return {"search-min", params, result};
  }

  Outcome audit(const std::string& kind) const {
    if (kind == "claims") return audit_claims();
    if (kind == "premises") return audit_premises();
    if (kind == "threshold") return audit_threshold();
    fail(ErrorKind::Parse, "unknown audit: " + kind);
  }

 private:
  json base_params(bool with_mode) const {
    json p = {{"n", o_.n}, {"k", o_.k}, {"family", o_.family}};
    if (with_mode) p["mode"] = to_string(mode_of(o_));
    return p;
  }

  Outcome audit_claims() const {
    const SetFamily f = family_of(o_, o_.family, "--family");
    need(!o_.eps.empty(), "--eps");
    const Mask s = s_of(o_);
    const ClaimAudit a = audit_claim_counts(f, s, Rational::parse(o_.eps));
    json params = {{"kind", "claims"}, {"n", o_.n}, {"family", o_.family}, {"s", o_.s}, {"eps", o_.eps}};
    json result = {
        {"kind", "claims"},
        {"n", o_.n},
        {"ell", a.ell},
        {"eps", rational_json(a.eps)},
        {"family_size", a.family_size},
        {"hypotheses",
         {{"s_has_size_ell", a.s_has_size_ell},
          {"maximal_3wise", a.maximal_3wise},
          {"empty_in_g", a.empty_in_g},
          {"s_not_in_g", a.s_not_in_g},
          {"sc_not_in_g", a.sc_not_in_g},
          {"g_delta_f0", a.g_delta_f0},
          {"delta_within_eps", a.delta_within_eps},
          {"size_at_most_extremal", a.size_at_most_extremal},
          {"met", a.hypotheses_met}}},
        {"g1", a.g1},
        {"g2", a.g2},
        {"g3", a.g3},
        {"injection", {{"lhs", a.uncovered_count}, {"rhs", rational_json(a.injection_bound)}, {"holds", a.injection_holds}}},
        {"cube_bound",
         {{"lhs", rational_json(a.injection_bound)},
          {"rhs", a.cube_bound},
          {"holds", a.cube_bound_holds},
          {"equality", a.cube_bound_tight},
          {"g3_empty", a.g3_empty},
          {"iff_applicable", a.iff_applicable},
          {"iff_consistent", a.iff_consistent}}},
        {"chain", {{"lower", a.chain_lower}, {"upper", a.chain_upper}, {"holds", a.chain_holds}}}};
    if (!a.hypotheses_met) result["verdict"] = "hypotheses unmet";
    return {"audit", params, result};
  }

  Outcome audit_premises() const {
    const SetFamily x = family_of(o_, o_.family, "--family");
    const SetFamily y = family_of(o_, o_.family2, "--family2");
    need(o_.ell >= 0, "--ell");
    need(o_.elem > 0, "--elem");
    const PremiseReport r = audit_lemma_size_premises(x, y, o_.ell, o_.elem, Rational::parse(o_.slack));
    json ratios = json::array();
    for (const auto& p : r.ratios) {
      ratios.push_back({{"name", p.name},
                        {"value", rational_json(p.value)},
                        {"target", rational_json(p.target)},
                        {"within", p.within}});
    }
    json params = {{"kind", "premises"}, {"n", o_.n},     {"family", o_.family}, {"family2", o_.family2},
                   {"ell", o_.ell},      {"elem", o_.elem}, {"slack", o_.slack}};
    return {"audit", params, {{"kind", "premises"}, {"ratios", ratios}, {"all_within", r.all_within}}};
  }

  Outcome audit_threshold() const {
    require(o_.from >= 2 && o_.from <= o_.to, ErrorKind::InvalidParameter, "need 2 <= --from <= --to");
    check_ground_size(o_.to, kMaxFamilyBits);
    const KwiseMode mode = mode_of(o_);
    json verdicts = json::array();
    std::optional<int> stable_from;
    for (int n = o_.from; n <= o_.to; ++n) {
      const SetFamily f = linked_cubes(n, balanced_half(n));
      json v = {{"n", n}, {"size", f.size()}};
      const bool kwise = is_k_wise_intersecting(f, o_.k, mode);
      v["kwise"] = kwise;
      std::optional<Mask> witness;
      if (kwise) witness = addable_witness(f, o_.k, mode);
      const bool maximal = kwise && !witness;
      v["maximal"] = maximal;
      if (witness) {
        SetFamily extended = f;
        extended.insert(*witness);
        v["addable"] = format_mask(*witness);
        v["addable_revalidated"] = is_k_wise_intersecting(extended, o_.k, mode);
      }
      if (!maximal) {
        stable_from.reset();
      } else if (!stable_from) {
        stable_from = n;
      }
      verdicts.push_back(std::move(v));
    }
    json params = {{"kind", "threshold"}, {"k", o_.k}, {"mode", to_string(mode)}, {"from", o_.from}, {"to", o_.to}};
    json result = {{"kind", "threshold"},
                   {"k", o_.k},
                   {"mode", to_string(mode)},
                   {"verdicts", verdicts},
                   {"stable_from", stable_from ? json(*stable_from) : json()}};
    return {"audit", params, result};
  }

  const Options& o_;
  fs::path sidecar_dir_;
};

void add_common_flags(CLI::App& app, Options& o) {
  app.add_option("--n", o.n, "Ground set size");
  app.add_option("--k", o.k, "Intersection arity k (default 3)");
  app.add_option("--mode", o.mode, "distinct | repetition");
  app.add_option("--family", o.family, "Family as hex bitmap, or @file");
  app.add_option("--family2", o.family2, "Second family (Y class, bipartite right side)");
  app.add_option("--s", o.s, "Subset S as a comma-separated element list");
  app.add_option("--partition", o.partition, "Partition blocks, e.g. 1,2|3,4");
  app.add_option("--eps", o.eps, "Rational p/q");
  app.add_option("--slack", o.slack, "Relative slack for premise audits (default 1/10)");
  app.add_option("--threshold", o.threshold, "Threshold for X(t), Y(t) (default 1/3)");
  app.add_option("--c", o.c, "Constant for the lower bound curve");
  app.add_option("--d", o.d, "Constant for the upper bound curve");
  app.add_option("--budget", o.budget, "Search budget in seconds");
  app.add_option("--out", o.out, "Append the ledger record to this file");
  app.add_option("--seed", o.seed, "Seed for randomized steps (default 0)");
  app.add_flag("--no-timestamp", o.no_timestamp, "Omit timestamps and wall-clock fields");
  app.add_option("--ell", o.ell, "Scale exponent ell");
  app.add_option("--elem", o.elem, "Distinguished element (1-based)");
  app.add_option("--bipartize", o.bipartize, "exact | heuristic");
  app.add_option("--moves", o.moves, "Move budget for heuristic bipartization");
  app.add_option("--edges", o.edges, "Write the edge list to this file");
  app.add_flag("--all", o.all, "Report every minimum witness up to isomorphism");
  app.add_flag("--no-symmetry", o.no_symmetry, "Disable symmetry pruning");
  app.add_flag("--nondegenerate", o.nondegenerate, "Only families with at least k members");
  app.add_option("--from", o.from, "First n for the threshold audit");
  app.add_option("--to", o.to, "Last n for the threshold audit");
  app.add_option("--ledger", o.ledger, "Ledger to summarise");
  app.add_option("--dir", o.dir, "Directory for report tables");
  app.add_option("--sample", o.sample, "Uncovered masks to list");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Verification and search for maximal k-wise intersecting families", "kwise"};
  app.fallthrough();
  app.require_subcommand(1);
  add_common_flags(app, o);

  std::string subkind;
  auto* check = app.add_subcommand("check", "k-wise and maximality verdicts for a family");
  auto* closure = app.add_subcommand("closure", "Extend a family to a maximal one");
  auto* construct = app.add_subcommand("construct", "Build an extremal family or evaluate size formulas");
  construct->require_subcommand(1);
  for (const char* kind : {"linked-cubes", "pair-of-cubes", "series-of-cubes", "formulas"}) {
    construct->add_subcommand(kind)->fallthrough()->callback([&subkind, kind] { subkind = kind; });
  }
  auto* gen = app.add_subcommand("gen-coverage", "Disjoint-union coverage of a family");
  auto* disj = app.add_subcommand("disjointness", "Disjointness graph and bipartization");
  auto* stats = app.add_subcommand("stats", "Stability statistics of a pair of classes");
  auto* search = app.add_subcommand("search-min", "Exact minimum size of a maximal family");
  auto* audit = app.add_subcommand("audit", "Numeric audits: claims, premises, threshold");
  audit->require_subcommand(1);
  for (const char* kind : {"claims", "premises", "threshold"}) {
    audit->add_subcommand(kind)->fallthrough()->callback([&subkind, kind] { subkind = kind; });
  }
  auto* report = app.add_subcommand("report", "CSV tables from a ledger");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    std::ofstream file;
    std::ostream* sink = &out;
    fs::path sidecar_dir = ".";
    if (!o.out.empty()) {
      const fs::path out_path(o.out);
      if (out_path.has_parent_path()) {
        fs::create_directories(out_path.parent_path());
        sidecar_dir = out_path.parent_path();
      }
      file.open(out_path, std::ios::binary | std::ios::app);
      require(static_cast<bool>(file), ErrorKind::InvalidParameter, "cannot open " + o.out);
      sink = &file;
    }

    Runner runner(o, sidecar_dir);
    Outcome outcome;
    if (check->parsed()) {
      outcome = runner.check();
    } else if (closure->parsed()) {
      outcome = runner.closure();
    } else if (construct->parsed()) {
      outcome = runner.construct(subkind);
    } else if (gen->parsed()) {
      outcome = runner.gen_coverage();
    } else if (disj->parsed()) {
      outcome = runner.disjointness();
    } else if (stats->parsed()) {
      outcome = runner.stats();
    } else if (search->parsed()) {
      outcome = runner.search_min_cmd();
    } else if (audit->parsed()) {
      outcome = runner.audit(subkind);
    } else if (report->parsed()) {
      need(!o.ledger.empty(), "--ledger");
      const ReportSummary s = write_report(o.ledger, o.dir);
      if (s.skipped > 0) err << "warning: skipped " << s.skipped << " malformed ledger line(s)\n";
      outcome = {"report",
                 {{"ledger", o.ledger}, {"dir", o.dir}},
                 {{"records", s.records},
                  {"skipped", s.skipped},
                  {"f_rows", s.f_rows},
                  {"construction_rows", s.construction_rows},
                  {"threshold_rows", s.threshold_rows}}};
    }
    const std::string timestamp = o.no_timestamp ? std::string() : utc_timestamp();
    *sink << make_record(outcome.command, outcome.params, outcome.result, o.seed, timestamp).dump() << '\n';
    sink->flush();
    return kExitOk;
  } catch (const CLI::RequiredError& e) {
    err << "error: missing " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace kwise::cli
