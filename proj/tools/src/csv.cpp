#include "csv.hpp"

#include <fstream>
#include <sstream>

#include "config.hpp"
#include "rfdress/app.hpp"

namespace rfdress::app {

CsvWriter::CsvWriter(std::filesystem::path path, std::string_view command, std::string_view units,
                     const std::string& config_echo)
    : path_(std::move(path)) {
  fmt::format_to(std::back_inserter(buf_), "# rfdress {}\n# command: {}\n# units: {}\n# config:\n", version(),
                 command, units);
  std::istringstream in(config_echo);
  std::string line;
  while (std::getline(in, line)) fmt::format_to(std::back_inserter(buf_), "#   {}\n", line);
}

void CsvWriter::note(std::string_view line) {
  if (header_written_) throw std::logic_error("CsvWriter: notes must precede the header");
  fmt::format_to(std::back_inserter(buf_), "# {}\n", line);
}

void CsvWriter::header(std::initializer_list<std::string_view> columns) {
  fmt::format_to(std::back_inserter(buf_), "{}\n", fmt::join(columns, ","));
  header_written_ = true;
}

void CsvWriter::row(std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) buf_.push_back(',');
    fmt::format_to(std::back_inserter(buf_), "{:.17g}", v);
    first = false;
  }
  buf_.push_back('\n');
}

std::filesystem::path CsvWriter::close() {
  std::ofstream out(path_, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path_.string());
  out.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
  if (!out) throw ConfigError("write failed for " + path_.string());
  return path_;
}

}  // namespace rfdress::app
