#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

namespace rfdress::app {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A YAML mapping read through typed accessors. Every value read, defaulted
// or not, is written to resolved(); that echo reproduces the run exactly.
// Keys never read are reported by check_unused().
class Config {
 public:
  Config();
  static Config parse(const std::string& text, const std::string& origin);
  // Plain YAML, or a CSV written by this tool (its echoed config block).
  static Config load(const std::filesystem::path& path);

  bool has(const std::string& key) const;
  double number(const std::string& key, std::optional<double> fallback = std::nullopt);
  long long integer(const std::string& key, std::optional<long long> fallback = std::nullopt);
  std::uint64_t unsigned64(const std::string& key, std::optional<std::uint64_t> fallback = std::nullopt);
  std::string text(const std::string& key, std::optional<std::string> fallback = std::nullopt);
  bool flag(const std::string& key, bool fallback);
  std::vector<double> numbers(const std::string& key, std::optional<std::vector<double>> fallback = std::nullopt);
  std::vector<long long> integers(const std::string& key,
                                  std::optional<std::vector<long long>> fallback = std::nullopt);
  // Nested mapping; a missing key behaves like an empty mapping.
  Config section(const std::string& key);
  // Sequence of mappings.
  std::vector<Config> sections(const std::string& key);
  // Writes a value that was not read from the input (derived defaults).
  void record(const std::string& key, double value);
  void record(const std::string& key, std::uint64_t value);

  void check_unused() const;
  const YAML::Node& resolved() const { return resolved_; }
  // The resolved config as block YAML.
  std::string echo() const;

 private:
  Config(YAML::Node input, YAML::Node resolved, std::string path);
  YAML::Node child(const std::string& key) const;
  std::string where(const std::string& key) const;

  YAML::Node input_;
  YAML::Node resolved_;
  std::string path_;
};

// Shortest representation that parses back to the same double.
std::string format_number(double v);

}  // namespace rfdress::app
