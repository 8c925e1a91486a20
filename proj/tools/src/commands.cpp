#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "config.hpp"
#include "csv.hpp"
#include "rfdress/app.hpp"
#include "rfdress/classical.hpp"
#include "rfdress/core.hpp"
#include "rfdress/ensemble.hpp"
#include "rfdress/errors.hpp"
#include "rfdress/floquet.hpp"
#include "rfdress/lzs.hpp"
#include "rfdress/timedomain.hpp"
#include "rfdress/units.hpp"

namespace rfdress::app {

namespace {

namespace fs = std::filesystem;
using units::from_mhz;
using units::to_mhz;

constexpr double kDefaultOmega0Mhz = 0.2;
constexpr const char* kUnits = "frequencies and energies MHz, fields V/cm, times us, angles rad";

struct Context {
  Config& cfg;
  const RunOptions& options;
  std::string command;
  std::vector<fs::path> files;

  CsvWriter writer(const std::string& name) const {
    return CsvWriter(options.out / name, command, kUnits, cfg.echo());
  }
};

StarkModel read_model(Config& cfg, const std::string& default_preset) {
  auto m = cfg.section("model");
  if (!m.has("kind")) {
    const auto name = m.text("preset", default_preset);
    const auto model = presets::by_name(name);
    if (!model) {
      throw ConfigError(fmt::format("model.preset: unknown preset '{}' (known: {})", name,
                                    fmt::join(presets::names(), ", ")));
    }
    return *model;
  }
  const auto kind = m.text("kind");
  const double w0 = from_mhz(m.number("w0_mhz"));
  if (kind == "linear") return StarkModel::linear(w0, from_mhz(m.number("k_mhz")));
  if (kind == "quadratic") return StarkModel::quadratic(w0, from_mhz(m.number("alpha_mhz")));
  throw ConfigError("model.kind: expected 'linear' or 'quadratic'");
}

CoupledSystem read_system(Config& cfg, const std::string& default_preset) {
  const auto model = read_model(cfg, default_preset);
  return CoupledSystem(model, from_mhz(cfg.number("omega0_mhz", kDefaultOmega0Mhz)));
}

double read_omega(Config& cfg, double fallback_mhz) {
  const double w = cfg.number("omega_mhz", fallback_mhz);
  if (!(w > 0.0)) throw ConfigError("omega_mhz: must be > 0");
  return from_mhz(w);
}

Axis read_axis(Config cfg, const Axis& fallback) {
  Axis a{cfg.number("min", fallback.min), cfg.number("max", fallback.max),
         static_cast<std::size_t>(std::max(0LL, cfg.integer("steps", static_cast<long long>(fallback.steps))))};
  a.validate("axis");
  return a;
}

FieldGrid read_grid(Config& cfg) {
  auto g = cfg.section("grid");
  const FieldGrid defaults;
  FieldGrid grid;
  grid.f_static = read_axis(g.section("f_static"), defaults.f_static);
  grid.f_rf = read_axis(g.section("f_rf"), defaults.f_rf);
  return grid;
}

std::string join_mhz(const std::vector<double>& values) {
  std::vector<std::string> parts;
  for (double v : values) parts.push_back(fmt::format("{:.17g}", to_mhz(v)));
  return fmt::format("{}", fmt::join(parts, ", "));
}

void cmd_sidebands(Context& ctx) {
  const auto model = read_model(ctx.cfg, "fig2-linear");
  const double omega = read_omega(ctx.cfg, 8.0);
  auto drives = ctx.cfg.sections("drives");
  std::vector<FieldDrive> parsed;
  for (auto& d : drives) {
    const double f_static = d.number("f_static");
    const double f_rf = d.number("f_rf");
    parsed.emplace_back(f_static, f_rf, omega);
  }
  ctx.cfg.check_unused();

  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const auto& drive = parsed[i];
    const auto spec = floquet::spectrum(model, drive);
    const auto args = floquet::bessel_args(model, drive);
    auto w = ctx.writer(fmt::format("sidebands_{:02d}.csv", i));
    w.note(fmt::format("drive: f_static={:.17g} f_rf={:.17g} omega_mhz={:.17g}", drive.f_static(), drive.f_rf(),
                       to_mhz(omega)));
    w.note(fmt::format("bessel_args: x={:.17g} y={:.17g}", args.x, args.y));
    if (drive.f_rf() > 0.0) w.note("asymptotes_mhz: " + join_mhz(classical::asymptotes(model, drive)));
    w.header({"n", "energy_mhz", "amplitude", "population"});
    for (const auto& s : spec.sidebands) {
      w.row({static_cast<double>(s.n), to_mhz(s.energy), s.amplitude, s.population});
    }
    ctx.files.push_back(w.close());
  }
}

void cmd_resonance_map(Context& ctx) {
  const auto system = read_system(ctx.cfg, "left-resonance");
  const double omega = read_omega(ctx.cfg, 8.0);
  const double linewidth = from_mhz(ctx.cfg.number("linewidth_mhz", floquet::kDefaultLinewidthMhz));
  const auto grid = read_grid(ctx.cfg);
  ctx.cfg.check_unused();

  const auto map = floquet::resonance_map(system, omega, grid, linewidth, ctx.options.workers);
  auto w = ctx.writer("resonance_map.csv");
  w.note("value: sum_n Omega_n^2 L(detuning_n), in MHz^2");
  for (const auto& line : floquet::classical_boundaries(system)) {
    w.note(fmt::format("boundary: {} with F_cross={:.17g}", line.label, std::fabs(line.c)));
  }
  w.header({"f_s", "f_rf", "value"});
  for (std::size_t r = 0; r < grid.f_rf.steps; ++r) {
    for (std::size_t s = 0; s < grid.f_static.steps; ++s) {
      w.row({grid.f_static.at(s), grid.f_rf.at(r), to_mhz(to_mhz(map.at(r, s)))});
    }
  }
  ctx.files.push_back(w.close());
}

lzs::Mode read_mode(Config& cfg) {
  const auto mode = cfg.text("mode", "exact");
  if (mode == "exact") return lzs::Mode::Exact;
  if (mode == "near-diabatic") return lzs::Mode::NearDiabatic;
  throw ConfigError("mode: expected 'exact' or 'near-diabatic'");
}

void cmd_lzs_map(Context& ctx) {
  const auto system = read_system(ctx.cfg, "left-resonance");
  const double omega = read_omega(ctx.cfg, 8.0);
  const auto n_cycles = ctx.cfg.integer("n_cycles", 3);
  const auto segment = ctx.cfg.integer("start_segment", 0);
  const auto mode = read_mode(ctx.cfg);
  const auto grid = read_grid(ctx.cfg);
  ctx.cfg.check_unused();
  if (n_cycles < 1) throw ConfigError("n_cycles: must be >= 1");
  if (segment < 0) throw ConfigError("start_segment: must be >= 0");

  const auto map = lzs::lzs_map(system, omega, grid, static_cast<int>(n_cycles), ctx.options.workers,
                                static_cast<std::size_t>(segment), mode);
  auto w = ctx.writer("lzs_map.csv");
  w.note("allowed_flag: 0 classically forbidden, 1 allowed, 2 tangential crossing");
  w.header({"f_s", "f_rf", "p_b", "allowed_flag"});
  const std::size_t cols = grid.f_static.steps;
  for (std::size_t r = 0; r < grid.f_rf.steps; ++r) {
    for (std::size_t s = 0; s < cols; ++s) {
      const std::size_t i = r * cols + s;
      w.row({grid.f_static.at(s), grid.f_rf.at(r), map.values[i], static_cast<double>(map.flags[i])});
    }
  }
  ctx.files.push_back(w.close());
}

void cmd_classical(Context& ctx) {
  const auto model = read_model(ctx.cfg, "fig2-linear");
  const double f_static = ctx.cfg.number("f_static", 0.2);
  const double f_rf = ctx.cfg.number("f_rf", 0.3);
  std::vector<double> omegas;
  for (double mhz : ctx.cfg.numbers("omegas_mhz", std::vector<double>{8.0, 2.0, 0.5, 0.25})) {
    if (!(mhz > 0.0)) throw ConfigError("omegas_mhz: values must be > 0");
    omegas.push_back(from_mhz(mhz));
  }
  const auto window_text = ctx.cfg.text("window", "auto");
  std::size_t window = 0;
  if (window_text != "auto") {
    try {
      const long long v = std::stoll(window_text);
      if (v < 1) throw std::invalid_argument("window");
      window = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ConfigError("window: expected 'auto' or a positive integer");
    }
  }
  const double margin = ctx.cfg.number("margin_factor", 3.0);
  ctx.cfg.check_unused();

  const auto comparisons =
      classical::sideband_vs_classical(model, f_static, f_rf, omegas, window, ctx.options.workers);
  auto summary = ctx.writer("classical_summary.csv");
  summary.header({"omega_mhz", "window", "mean_relative_deviation", "samples"});
  for (std::size_t i = 0; i < comparisons.size(); ++i) {
    const auto& c = comparisons[i];
    const auto dev = classical::classical_deviation(c, margin);
    auto w = ctx.writer(fmt::format("classical_{:02d}.csv", i));
    w.note(fmt::format("omega_mhz: {:.17g}", to_mhz(c.omega)));
    w.note(fmt::format("window: {}", c.window));
    w.note("asymptotes_mhz: " + join_mhz(c.asymptotes));
    w.note(fmt::format("mean_relative_deviation: {:.17g} over {} sidebands", dev.mean_relative, dev.samples));
    w.header({"energy_mhz", "population", "classical_scaled", "moving_avg"});
    for (const auto& row : c.rows) w.row({to_mhz(row.energy), row.population, row.classical_scaled, row.moving_average});
    ctx.files.push_back(w.close());
    summary.row({to_mhz(c.omega), static_cast<double>(c.window), dev.mean_relative, static_cast<double>(dev.samples)});
  }
  ctx.files.push_back(summary.close());
}

void cmd_evolve(Context& ctx) {
  const auto system = read_system(ctx.cfg, "left-resonance");
  const double omega = read_omega(ctx.cfg, 8.0);
  const double f_static = ctx.cfg.number("f_static");
  const double f_rf = ctx.cfg.number("f_rf");
  const double phase = ctx.cfg.number("phase_rad", 0.0);
  const FieldDrive drive(f_static, f_rf, omega, phase);
  const double t_end = ctx.cfg.number("t_end_us", 20.0);
  const double dt = ctx.cfg.number("dt_us", timedomain::default_step(drive));
  const auto initial_text = ctx.cfg.text("initial", "state1");
  timedomain::EvolveOptions opts;
  opts.energy_offset = from_mhz(ctx.cfg.number("energy_offset_mhz", 0.0));
  const auto stride = ctx.cfg.integer("stride", 1);
  ctx.cfg.check_unused();
  if (stride < 1) throw ConfigError("stride: must be >= 1");
  opts.stride = static_cast<std::size_t>(stride);
  timedomain::Initial initial;
  if (initial_text == "state1") {
    initial = timedomain::Initial::State1;
  } else if (initial_text == "state2") {
    initial = timedomain::Initial::State2;
  } else {
    throw ConfigError("initial: expected 'state1' or 'state2'");
  }

  const auto r = timedomain::evolve(system, drive, t_end, dt, initial, opts);
  auto w = ctx.writer("evolve.csv");
  w.note(fmt::format("step_us: {:.17g}", r.step));
  w.note(fmt::format("norm_drift: {:.3e}", r.norm_drift));
  w.header({"t_us", "pop1", "pop2"});
  for (std::size_t i = 0; i < r.times.size(); ++i) w.row({r.times[i], r.pop1[i], r.pop2[i]});
  ctx.files.push_back(w.close());
}

void cmd_ensemble(Context& ctx) {
  const auto model = read_model(ctx.cfg, "left-resonance");
  const double omega = read_omega(ctx.cfg, 8.0);
  const double t = ctx.cfg.number("t_us", 20.0);
  const auto count = ctx.cfg.integer("count", 10000);
  std::uint64_t seed = 0;
  if (ctx.options.seed) {
    seed = *ctx.options.seed;
    ctx.cfg.record("seed", seed);
  } else {
    seed = ctx.cfg.unsigned64("seed", 1);
  }
  const auto n_values = ctx.cfg.integers("n_values", std::vector<long long>{-3, -2, -1, 0, 1, 2});
  const auto theta_axis = read_axis(ctx.cfg.section("theta"), Axis{0.0, 0.5 * std::numbers::pi, 91});
  auto g = ctx.cfg.section("geometry");
  ensemble::PairGeometry geometry;
  geometry.d = g.number("d_um", geometry.d);
  geometry.sigma_long = g.number("sigma_long_um", geometry.sigma_long);
  geometry.sigma_trans = g.number("sigma_trans_um", geometry.sigma_trans);
  geometry.mu_product = g.number("mu_product", geometry.mu_product);
  const bool dump = ctx.cfg.flag("dump_pairs", false);
  ctx.cfg.check_unused();
  if (count < 1) throw ConfigError("count: must be >= 1");

  const auto pairs = ensemble::sample_ensemble(geometry, static_cast<std::size_t>(count), seed, ctx.options.workers);
  std::vector<double> thetas;
  for (std::size_t i = 0; i < theta_axis.steps; ++i) thetas.push_back(theta_axis.at(i));

  for (long long n : n_values) {
    const auto curve =
        ensemble::mixing_angle_scan(pairs, model, omega, static_cast<int>(n), thetas, t, ctx.options.workers);
    const auto onset = ensemble::classical_onset(model, omega, static_cast<int>(n));
    auto w = ctx.writer(fmt::format("ensemble_n{:+d}.csv", n));
    w.note(fmt::format("n: {}", n));
    w.note(fmt::format("f_eff: {:.17g}", curve.f_eff));
    if (onset.one_crossing) w.note(fmt::format("classical_onset_rad: {:.17g}", *onset.one_crossing));
    if (onset.two_crossing) w.note(fmt::format("two_crossing_onset_rad: {:.17g}", *onset.two_crossing));
    w.header({"theta_f", "pp_fraction"});
    for (std::size_t i = 0; i < thetas.size(); ++i) w.row({curve.theta[i], curve.pp_fraction[i]});
    ctx.files.push_back(w.close());
  }
  if (dump) {
    auto w = ctx.writer("ensemble_pairs.csv");
    w.header({"x_um", "y_um", "z_um", "r_um", "vdd_mhz"});
    for (std::size_t i = 0; i < pairs.positions.size(); ++i) {
      const auto& p = pairs.positions[i];
      w.row({p[0], p[1], p[2], pairs.distances[i], to_mhz(pairs.couplings[i])});
    }
    ctx.files.push_back(w.close());
  }
}

const std::map<std::string, std::function<void(Context&)>>& registry() {
  static const std::map<std::string, std::function<void(Context&)>> commands{
      {"sidebands", cmd_sidebands}, {"resonance-map", cmd_resonance_map}, {"lzs-map", cmd_lzs_map},
      {"classical", cmd_classical}, {"evolve", cmd_evolve},               {"ensemble", cmd_ensemble},
  };
  return commands;
}

}  // namespace

const char* version() { return RFDRESS_VERSION; }

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

RunResult run(const std::string& command, const RunOptions& options) {
  RunResult result;
  try {
    const auto it = registry().find(command);
    if (it == registry().end()) throw ConfigError("unknown command '" + command + "'");
    if (options.workers < 1) throw ConfigError("workers must be >= 1");
    Config cfg;
    if (options.config) {
      cfg = Config::load(*options.config);
    } else if (options.config_text) {
      cfg = Config::parse(*options.config_text, "inline config");
    }
    const auto echoed = cfg.text("command", command);
    if (echoed != command) throw ConfigError("config was written for '" + echoed + "', not '" + command + "'");
    fs::create_directories(options.out);
    Context ctx{cfg, options, command, {}};
    it->second(ctx);
    result.files = std::move(ctx.files);
  } catch (const ConfigError& e) {
    result = {kExitConfig, e.what(), {}};
  } catch (const YAML::Exception& e) {
    result = {kExitConfig, e.what(), {}};
  } catch (const DomainError& e) {
    result = {kExitConfig, e.what(), {}};
  } catch (const fs::filesystem_error& e) {
    result = {kExitConfig, e.what(), {}};
  } catch (const NumericError& e) {
    result = {kExitNumeric, e.what(), {}};
  } catch (const std::exception& e) {
    result = {kExitNumeric, e.what(), {}};
  }
  return result;
}

}  // namespace rfdress::app
