#include "config.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace rfdress::app {

namespace {

constexpr const char* kEchoBegin = "# config:";
constexpr const char* kEchoPrefix = "#   ";

std::string extract_echo(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string out;
  bool inside = false;
  while (std::getline(in, line)) {
    if (!inside) {
      inside = line == kEchoBegin;
      continue;
    }
    if (line.rfind(kEchoPrefix, 0) != 0) break;
    out += line.substr(4) + "\n";
  }
  return out;
}

void collect_unused(const YAML::Node& input, const YAML::Node& resolved, const std::string& path,
                    std::vector<std::string>& unused) {
  if (input.IsMap()) {
    for (const auto& kv : input) {
      const auto key = kv.first.as<std::string>();
      const std::string p = path.empty() ? key : path + "." + key;
      const YAML::Node r = resolved.IsMap() ? resolved[key] : YAML::Node();
      if (!r.IsDefined() || r.IsNull()) {
        unused.push_back(p);
        continue;
      }
      collect_unused(kv.second, r, p, unused);
    }
  } else if (input.IsSequence() && resolved.IsSequence()) {
    for (std::size_t i = 0; i < input.size() && i < resolved.size(); ++i) {
      collect_unused(input[i], resolved[i], path + "[" + std::to_string(i) + "]", unused);
    }
  }
}

}  // namespace

std::string format_number(double v) { return fmt::format("{}", v); }

Config::Config() : Config(YAML::Node(YAML::NodeType::Map), YAML::Node(YAML::NodeType::Map), "") {}

Config::Config(YAML::Node input, YAML::Node resolved, std::string path)
    : input_(std::move(input)), resolved_(std::move(resolved)), path_(std::move(path)) {}

Config Config::parse(const std::string& text, const std::string& origin) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  if (root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
  if (!root.IsMap()) throw ConfigError(origin + ": top level must be a mapping");
  return Config(root, YAML::Node(YAML::NodeType::Map), "");
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // A CSV written by this tool carries its config as a commented block;
  // anything else is read as YAML (comments included).
  if (text.rfind("# rfdress", 0) == 0) {
    text = extract_echo(text);
    if (text.empty()) throw ConfigError(path.string() + ": no echoed config block found");
  }
  return parse(text, path.string());
}

YAML::Node Config::child(const std::string& key) const {
  if (!input_.IsMap()) return YAML::Node();
  return input_[key];
}

std::string Config::where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

bool Config::has(const std::string& key) const {
  const auto n = child(key);
  return n.IsDefined() && !n.IsNull();
}

double Config::number(const std::string& key, std::optional<double> fallback) {
  double v = 0.0;
  if (has(key)) {
    try {
      v = child(key).as<double>();
    } catch (const YAML::Exception&) {
      throw ConfigError(where(key) + ": expected a number");
    }
  } else if (fallback) {
    v = *fallback;
  } else {
    throw ConfigError(where(key) + ": required");
  }
  resolved_[key] = format_number(v);
  return v;
}

long long Config::integer(const std::string& key, std::optional<long long> fallback) {
  long long v = 0;
  if (has(key)) {
    try {
      v = child(key).as<long long>();
    } catch (const YAML::Exception&) {
      throw ConfigError(where(key) + ": expected an integer");
    }
  } else if (fallback) {
    v = *fallback;
  } else {
    throw ConfigError(where(key) + ": required");
  }
  resolved_[key] = v;
  return v;
}

std::uint64_t Config::unsigned64(const std::string& key, std::optional<std::uint64_t> fallback) {
  std::uint64_t v = 0;
  if (has(key)) {
    try {
      v = child(key).as<std::uint64_t>();
    } catch (const YAML::Exception&) {
      throw ConfigError(where(key) + ": expected an unsigned integer");
    }
  } else if (fallback) {
    v = *fallback;
  } else {
    throw ConfigError(where(key) + ": required");
  }
  resolved_[key] = v;
  return v;
}

std::string Config::text(const std::string& key, std::optional<std::string> fallback) {
  std::string v;
  if (has(key)) {
    try {
      v = child(key).as<std::string>();
    } catch (const YAML::Exception&) {
      throw ConfigError(where(key) + ": expected a string");
    }
  } else if (fallback) {
    v = *fallback;
  } else {
    throw ConfigError(where(key) + ": required");
  }
  resolved_[key] = v;
  return v;
}

bool Config::flag(const std::string& key, bool fallback) {
  bool v = fallback;
  if (has(key)) {
    try {
      v = child(key).as<bool>();
    } catch (const YAML::Exception&) {
      throw ConfigError(where(key) + ": expected true or false");
    }
  }
  resolved_[key] = v;
  return v;
}

std::vector<double> Config::numbers(const std::string& key, std::optional<std::vector<double>> fallback) {
  std::vector<double> v;
  if (has(key)) {
    const auto n = child(key);
    if (!n.IsSequence()) throw ConfigError(where(key) + ": expected a list of numbers");
    try {
      for (const auto& e : n) v.push_back(e.as<double>());
    } catch (const YAML::Exception&) {
      throw ConfigError(where(key) + ": expected a list of numbers");
    }
  } else if (fallback) {
    v = *fallback;
  } else {
    throw ConfigError(where(key) + ": required");
  }
  YAML::Node out(YAML::NodeType::Sequence);
  out.SetStyle(YAML::EmitterStyle::Flow);
  for (double x : v) out.push_back(format_number(x));
  resolved_[key] = out;
  return v;
}

std::vector<long long> Config::integers(const std::string& key, std::optional<std::vector<long long>> fallback) {
  std::vector<long long> v;
  if (has(key)) {
    const auto n = child(key);
    if (!n.IsSequence()) throw ConfigError(where(key) + ": expected a list of integers");
    try {
      for (const auto& e : n) v.push_back(e.as<long long>());
    } catch (const YAML::Exception&) {
      throw ConfigError(where(key) + ": expected a list of integers");
    }
  } else if (fallback) {
    v = *fallback;
  } else {
    throw ConfigError(where(key) + ": required");
  }
  YAML::Node out(YAML::NodeType::Sequence);
  out.SetStyle(YAML::EmitterStyle::Flow);
  for (long long x : v) out.push_back(x);
  resolved_[key] = out;
  return v;
}

Config Config::section(const std::string& key) {
  const bool present = has(key);
  if (present && !child(key).IsMap()) throw ConfigError(where(key) + ": expected a mapping");
  YAML::Node in = present ? child(key) : YAML::Node(YAML::NodeType::Map);
  resolved_[key] = YAML::Node(YAML::NodeType::Map);
  return Config(in, resolved_[key], where(key));
}

std::vector<Config> Config::sections(const std::string& key) {
  if (!has(key)) throw ConfigError(where(key) + ": required");
  const auto in = child(key);
  if (!in.IsSequence()) throw ConfigError(where(key) + ": expected a list of mappings");
  YAML::Node seq(YAML::NodeType::Sequence);
  std::vector<Config> out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!in[i].IsMap()) throw ConfigError(where(key) + ": expected a list of mappings");
    seq.push_back(YAML::Node(YAML::NodeType::Map));
  }
  resolved_[key] = seq;
  for (std::size_t i = 0; i < in.size(); ++i) {
    out.push_back(Config(in[i], resolved_[key][i], where(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void Config::record(const std::string& key, double value) { resolved_[key] = format_number(value); }

void Config::record(const std::string& key, std::uint64_t value) { resolved_[key] = value; }

void Config::check_unused() const {
  std::vector<std::string> unused;
  collect_unused(input_, resolved_, path_, unused);
  if (unused.empty()) return;
  std::string msg = "unknown config key";
  msg += unused.size() > 1 ? "s: " : ": ";
  for (std::size_t i = 0; i < unused.size(); ++i) msg += (i ? ", " : "") + unused[i];
  throw ConfigError(msg);
}

std::string Config::echo() const {
  YAML::Emitter e;
  e << resolved_;
  return e.c_str();
}

}  // namespace rfdress::app
