#include "diamond/manifest.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace diamond {

namespace {

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string join(const std::vector<std::string> &items, const char *sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += sep;
    out += items[k];
  }
  return out;
}

}  // namespace

std::string format_exact(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string RunManifest::to_text() const {
  std::string out;
  auto line = [&](const std::string &key, const std::string &value) {
    out += key + " = " + value + "\n";
  };
  line("command", command);
  line("arguments", join(arguments, " "));
  line("J", format_exact(params.J));
  line("Jz", format_exact(params.Jz));
  line("J0", format_exact(params.J0));
  line("h", format_exact(params.h));
  line("hp", format_exact(params.hp));
  line("seed", seed ? std::to_string(*seed) : "none");
  for (const auto &[key, value] : extra) line(key, value);
  line("outputs", join(outputs, ","));
  line("tool_version", tool_version);
  return out;
}

void RunManifest::write_alongside_outputs() const {
  const std::string text = to_text();
  for (const auto &output : outputs) {
    std::ofstream out(output + ".manifest", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest for '" + output + "'");
    out << text;
  }
}

std::vector<std::pair<std::string, std::string>> read_key_values(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string raw;
  for (int lineno = 1; std::getline(in, raw); ++lineno) {
    const std::string text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos || trim(text.substr(0, eq)).empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    entries.emplace_back(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
  }
  return entries;
}

}  // namespace diamond
