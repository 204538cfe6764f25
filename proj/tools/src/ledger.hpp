#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "kwise/family.hpp"

namespace kwise::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
// Families with more than 2^20 membership bits go to sidecar files.
inline constexpr int kInlineFamilyBits = 20;

/// UTC, second resolution: 2024-01-31T12:00:00Z.
std::string utc_timestamp();

std::string sha256_hex(const std::string& data);

/// One ledger line. The timestamp key is omitted when `timestamp` is empty.
json make_record(const std::string& command, json params, json result, std::uint64_t seed,
                 const std::string& timestamp);

/// Inline hex for small families; otherwise writes <dir>/family-<sha256>.hex
/// and returns {"sidecar": file name, "sha256": digest}.
json family_to_json(const SetFamily& family, const std::filesystem::path& sidecar_dir);

/// Hex text, or the contents of a file when the argument starts with '@'.
SetFamily read_family_arg(int n, const std::string& arg);

}  // namespace kwise::cli
