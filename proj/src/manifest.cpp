#include "synlex/manifest.hpp"

#include <unistd.h>

#include <cstdio>
#include <fstream>

#include "synlex/errors.hpp"
#include "synlex/io.hpp"

namespace synlex {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

void RunManifest::add_input(const std::filesystem::path& path) {
  inputs.emplace_back(path.string(), fnv1a64_hex(read_file(path)));
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json jinputs = nlohmann::json::array();
  for (const auto& [path, digest] : inputs)
    jinputs.push_back({{"path", path}, {"fnv1a64", digest}});
  return {{"command", command},
          {"inputs", std::move(jinputs)},
          {"config", config},
          {"tool", std::string(kToolVersion)}};
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::filesystem::path tmp =
      dir / (path.filename().string() + ".tmp" +
             std::to_string(static_cast<unsigned long>(::getpid())));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ParseError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace synlex
