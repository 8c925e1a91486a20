#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rfdress/app.hpp"
#include "rfdress/besselx.hpp"
#include "rfdress/errors.hpp"

namespace rfdress::app {

namespace {

int genbessel(int n, double x, double y, std::ostream& out, std::ostream& err) {
  try {
    const double sum = besselx::gen_bessel_sum({n, x, y});
    const double integral = besselx::gen_bessel_integral({n, x, y});
    out << fmt::format("{:.17g},{:.17g},{:.3e}\n", sum, integral, std::fabs(sum - integral));
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-level system in a static plus RF field: Floquet sidebands, LZS maps, time-domain runs"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  RunOptions opts;
  std::string config;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  app.add_option("--config", config, "YAML config, or a CSV written by rfdress (re-runs its echoed config)");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for the ensemble sampler (overrides the config)");
  app.add_option("--workers", opts.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", out_dir, "Output directory");

  std::string chosen;
  for (const auto& name : command_names()) {
    app.add_subcommand(name)->fallthrough()->callback([&chosen, name] { chosen = name; });
  }
  int n = 0;
  double x = 0.0;
  double y = 0.0;
  auto* gb = app.add_subcommand("genbessel", "Print J_n(x, y) by series and by quadrature, and their difference");
  gb->add_option("n", n)->required();
  gb->add_option("x", x)->required();
  gb->add_option("y", y)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (gb->parsed()) return genbessel(n, x, y, out, err);

  if (!config.empty()) opts.config = config;
  if (*seed_opt) opts.seed = seed;
  opts.out = out_dir;
  const auto result = run(chosen, opts);
  if (result.exit_code != kExitOk) {
    err << "error: " << result.message << '\n';
    return result.exit_code;
  }
  for (const auto& f : result.files) out << f.string() << '\n';
  return kExitOk;
}

}  // namespace rfdress::app
