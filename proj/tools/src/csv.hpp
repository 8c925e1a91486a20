#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

namespace rfdress::app {

// CSV file with a '#' metadata block (tool version, command, units, echoed
// config, extra notes) above the header row. Numbers are written with 17
// significant digits so files round-trip exactly.
class CsvWriter {
 public:
  CsvWriter(std::filesystem::path path, std::string_view command, std::string_view units,
            const std::string& config_echo);

  void note(std::string_view line);
  void header(std::initializer_list<std::string_view> columns);
  void row(std::initializer_list<double> values);
  // Writes the buffer to disk; returns the path.
  std::filesystem::path close();

 private:
  std::filesystem::path path_;
  fmt::memory_buffer buf_;
  bool header_written_ = false;
};

}  // namespace rfdress::app
