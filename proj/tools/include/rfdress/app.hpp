#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// The rfdress command-line tool as a library, so that tests can drive it
// in-process.
namespace rfdress::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

const char* version();

// Subcommands that read a config: sidebands, resonance-map, lzs-map,
// classical, evolve, ensemble.
std::vector<std::string> command_names();

struct RunOptions {
  std::optional<std::filesystem::path> config;  // YAML, or a CSV written by this tool
  std::optional<std::string> config_text;       // inline YAML; used when config is unset
  std::optional<std::uint64_t> seed;            // overrides the config's seed
  unsigned workers = 1;
  std::filesystem::path out = ".";
};

struct RunResult {
  int exit_code = kExitOk;
  std::string message;  // error text when exit_code != 0
  std::vector<std::filesystem::path> files;
};

// Runs one config-driven subcommand.
RunResult run(const std::string& command, const RunOptions& options);

// Full command line; args[0] is the program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rfdress::app
