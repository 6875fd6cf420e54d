#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diamond/hamiltonian.hpp"

namespace diamond {

inline constexpr const char *kToolVersion = "0.1.0";

/// Flat `key = value` record written next to every output file; holds
/// enough to rerun the command exactly.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  ClusterParams params;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;
  std::string tool_version = kToolVersion;
  /// Command-specific settings (axes, quantity, ...), written in order.
  std::vector<std::pair<std::string, std::string>> extra;

  std::string to_text() const;
  /// Writes to `<output>.manifest` for each output file.
  void write_alongside_outputs() const;
};

/// Shortest decimal form that reads back to the same double.
std::string format_exact(double v);

/// Parses a flat `key = value` file (blank lines and `#` comments skipped).
/// Throws std::runtime_error on a malformed line or unreadable file.
std::vector<std::pair<std::string, std::string>> read_key_values(const std::string &path);

}  // namespace diamond
