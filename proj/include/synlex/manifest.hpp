#ifndef SYNLEX_MANIFEST_HPP
#define SYNLEX_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace synlex {

inline constexpr std::string_view kToolVersion = "synlex 0.1.0";

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

struct RunManifest {
  std::string command;
  // (path, fnv1a64 hex digest of the file content)
  std::vector<std::pair<std::string, std::string>> inputs;
  nlohmann::json config;

  void add_input(const std::filesystem::path& path);
  nlohmann::json to_json() const;
};

// Writes via a temp file in the target directory plus rename, so readers
// never observe a half-written file.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace synlex

#endif
