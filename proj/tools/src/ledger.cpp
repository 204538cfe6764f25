#include "ledger.hpp"

#include <openssl/evp.h>

#include <array>
#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "kwise/error.hpp"

namespace kwise::cli {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorKind::InvalidParameter, "sha256 failed");
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kDigits[md[i] >> 4];
    out += kDigits[md[i] & 15];
  }
  return out;
}

json make_record(const std::string& command, json params, json result, std::uint64_t seed,
                 const std::string& timestamp) {
  json record = {{"schema_version", kSchemaVersion},
                 {"command", command},
                 {"params", std::move(params)},
                 {"result", std::move(result)},
                 {"seed", seed}};
  if (!timestamp.empty()) record["timestamp"] = timestamp;
  return record;
}

json family_to_json(const SetFamily& family, const std::filesystem::path& sidecar_dir) {
  std::string hex = to_hex(family);
  if (family.ground_size() <= kInlineFamilyBits) return hex;
  const std::string digest = sha256_hex(hex);
  const std::string name = "family-" + digest + ".hex";
  std::ofstream file(sidecar_dir / name, std::ios::binary | std::ios::trunc);
  file << hex;  // digest covers the file bytes exactly
  require(static_cast<bool>(file), ErrorKind::InvalidParameter,
          "cannot write sidecar " + (sidecar_dir / name).string());
  return {{"sidecar", name}, {"sha256", digest}};
}

SetFamily read_family_arg(int n, const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return from_hex(n, arg);
  std::ifstream file(arg.substr(1), std::ios::binary);
  require(static_cast<bool>(file), ErrorKind::InvalidParameter, "cannot read family file " + arg.substr(1));
  std::ostringstream text;
  text << file.rdbuf();
  std::string hex = text.str();
  while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.back())) != 0) hex.pop_back();
  return from_hex(n, hex);
}

}  // namespace kwise::cli
