#include "report.hpp"

#include <fstream>
#include <map>
#include <string>
#include <tuple>

#include "kwise/constructions.hpp"
#include "kwise/error.hpp"
#include "ledger.hpp"

namespace kwise::cli {
namespace {

std::string optional_cell(const json& value) {
  if (value.is_null()) return "";
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

template <typename Fn>
std::string formula_cell(Fn&& fn) {
  try {
    return std::to_string(fn());
  } catch (const Error&) {
    return "";  // formula undefined for these parameters
  }
}

// Result without wall-clock fields, for the determinism comparison.
json comparable(json result) {
  if (result.is_object()) result.erase("seconds");
  return result;
}

bool well_formed(const json& record) {
  return record.is_object() && record.contains("command") && record["command"].is_string() &&
         record.contains("params") && record["params"].is_object() && record.contains("result") &&
         record.contains("seed") && record["seed"].is_number_unsigned();
}

void open_csv(std::ofstream& file, const std::filesystem::path& path, const char* header) {
  file.open(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(file), ErrorKind::InvalidParameter, "cannot write " + path.string());
  file << header << '\n';
}

}  // namespace

ReportSummary write_report(const std::filesystem::path& ledger, const std::filesystem::path& dir) {
  std::ifstream in(ledger, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::InvalidParameter, "cannot read ledger " + ledger.string());

  ReportSummary summary;
  std::map<std::string, json> by_key;  // command|params|seed -> record
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !well_formed(record)) {
      ++summary.skipped;
      continue;
    }
    const std::string key = record["command"].get<std::string>() + '|' + record["params"].dump() + '|' +
                            std::to_string(record["seed"].get<std::uint64_t>());
    auto [it, inserted] = by_key.emplace(key, record);
    if (!inserted && comparable(it->second["result"]) != comparable(record["result"])) {
      fail(ErrorKind::InvalidParameter, "ledger integrity error at line " + std::to_string(line_no) +
                                            ": same command, params and seed with a different result");
    }
  }
  summary.records = by_key.size();

  using FKey = std::tuple<int, int, std::string, std::string>;
  std::map<FKey, std::string> f_rows;
  std::map<std::tuple<int, std::string, std::string>, std::string> construction_rows;
  std::map<std::tuple<int, std::string>, std::string> threshold_rows;

  for (const auto& [key, record] : by_key) {
    const std::string command = record["command"];
    const json& result = record["result"];
    if (!result.is_object()) continue;
    if (command == "search-min" && result.contains("n") && result.contains("k")) {
      const int n = result["n"];
      const int k = result["k"];
      const std::string mode = result.value("mode", "distinct");
      const std::string regime = result.value("regime", "all");
      std::string row = std::to_string(n) + ',' + std::to_string(k) + ',' + mode + ',' + regime + ',' +
                        optional_cell(result.value("f", json())) + ',' +
                        optional_cell(result.value("optimal", json())) + ',' +
                        formula_cell([&] { return balanced_linked_cubes_size(n); }) + ',' +
                        formula_cell([&] { return series_k_minus_one_size(n, k); }) + ',' +
                        formula_cell([&] { return janzer_size(n, k); });
      f_rows[{n, k, mode, regime}] = std::move(row);
    } else if (command == "construct" && result.contains("n") && result.contains("size")) {
      const int n = result["n"];
      const std::string kind = result.value("kind", "");
      const std::string s = record["params"].value("s", record["params"].value("partition", ""));
      std::string row = std::to_string(n) + ',' + optional_cell(result["size"]) + ',' +
                        optional_cell(result.value("formula_size", json())) + ',' + kind + ",\"" + s + '"';
      construction_rows[{n, kind, s}] = std::move(row);
    } else if (command == "audit" && result.value("kind", "") == "threshold" && result.contains("verdicts")) {
      const std::string key_k = std::to_string(result.value("k", 3)) + '/' + result.value("mode", "distinct");
      for (const auto& v : result["verdicts"]) {
        const int n = v["n"];
        threshold_rows[{n, key_k}] = std::to_string(n) + ',' + std::to_string(result.value("k", 3)) + ',' +
                                     result.value("mode", "distinct") + ',' + optional_cell(v["size"]) +
                                     ',' + optional_cell(v["maximal"]) + ",\"" +
                                     optional_cell(v.value("addable", json())) + '"';
      }
    }
  }

  std::filesystem::create_directories(dir);
  std::ofstream f_csv;
  open_csv(f_csv, dir / "f_table.csv",
           "n,k,mode,regime,f,optimal,linked_cubes_formula,series_k_minus_one_size,janzer_size");
  for (const auto& [k, row] : f_rows) f_csv << row << '\n';
  std::ofstream c_csv;
  open_csv(c_csv, dir / "constructions.csv", "n,size,formula_size,kind,s");
  for (const auto& [k, row] : construction_rows) c_csv << row << '\n';
  std::ofstream t_csv;
  open_csv(t_csv, dir / "threshold.csv", "n,k,mode,size,maximal,addable_witness");
  for (const auto& [k, row] : threshold_rows) t_csv << row << '\n';

  summary.f_rows = f_rows.size();
  summary.construction_rows = construction_rows.size();
  summary.threshold_rows = threshold_rows.size();
  return summary;
}

}  // namespace kwise::cli
