#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace covering {

inline constexpr const char* kToolVersion = "0.1.0";

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Reproducibility header emitted verbatim at the top of every report:
/// command, resolved options in a stable order, and a content hash per
/// input file. Lines start with '#' so record parsers skip them.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> options;
  std::vector<std::pair<std::string, std::uint64_t>> inputs;

  void add_option(const std::string& key, const std::string& value) {
    options.emplace_back(key, value);
  }

  void add_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    inputs.emplace_back(path, fnv1a64(buf.str()));
  }

  void print(std::ostream& os) const {
    os << "# manifest tool=covering-forge version=" << kToolVersion << "\n";
    os << "# manifest command=" << command << "\n";
    for (const auto& [k, v] : options)
      os << "# manifest option " << k << "=" << v << "\n";
    for (const auto& [path, hash] : inputs) {
      char hex[17];
      std::snprintf(hex, sizeof(hex), "%016llx",
                    static_cast<unsigned long long>(hash));
      os << "# manifest input path=" << path << " fnv1a64=" << hex << "\n";
    }
  }
};

}  // namespace covering
