#include "rfdress/floquet.hpp"

#include <cmath>

#include "rfdress/besselx.hpp"
#include "rfdress/errors.hpp"

namespace rfdress::floquet {

double SidebandSpectrum::total_population() const {
  double total = 0.0;
  for (const auto& s : sidebands) total += s.population;
  return total;
}

BesselArgs bessel_args(const StarkModel& model, const FieldDrive& drive) {
  const double w = drive.omega();
  const double f_rf = drive.f_rf();
  if (model.kind() == StarkKind::Linear) return {model.k() * f_rf / w, 0.0};
  return {model.alpha() * f_rf * drive.f_static() / w, model.alpha() * f_rf * f_rf / (8.0 * w)};
}

int sideband_half_width(const BesselArgs& args) {
  return static_cast<int>(std::ceil(std::fabs(args.x) + 2.0 * std::fabs(args.y))) + 40;
}

double mean_energy(const StarkModel& model, const FieldDrive& drive) {
  if (model.kind() == StarkKind::Linear) return model.w0() - model.k() * drive.f_static();
  const double f_eff = effective_field(drive);
  return model.w0() - 0.5 * model.alpha() * f_eff * f_eff;
}

double sideband_energy(const StarkModel& model, const FieldDrive& drive, int n) {
  return mean_energy(model, drive) - static_cast<double>(n) * drive.omega();
}

SidebandSpectrum spectrum(const StarkModel& model, const FieldDrive& drive) {
  const auto args = bessel_args(model, drive);
  const int half = sideband_half_width(args);
  const auto amps = besselx::gen_bessel_orders(-half, half, args.x, args.y);

  SidebandSpectrum out{drive, model, {}, -half, half};
  out.sidebands.reserve(amps.size());
  const double base = mean_energy(model, drive);
  for (int n = -half; n <= half; ++n) {
    const double a = amps[static_cast<std::size_t>(n + half)];
    out.sidebands.push_back({n, base - n * drive.omega(), a, a * a});
  }
  return out;
}

double sideband_amplitude(const StarkModel& model, const FieldDrive& drive, int n) {
  const auto args = bessel_args(model, drive);
  if (args.y == 0.0) return besselx::bessel_j(n, args.x);
  return besselx::gen_bessel_sum({n, args.x, args.y});
}

double resonance_detuning(const CoupledSystem& system, const FieldDrive& drive, int n) {
  return sideband_energy(system.stark(), drive, n);
}

double coupling_amplitude(const CoupledSystem& system, const FieldDrive& drive, int n) {
  return system.omega0() * sideband_amplitude(system.stark(), drive, n);
}

double coupling_strength(const CoupledSystem& system, const FieldDrive& drive, int n) {
  return std::fabs(coupling_amplitude(system, drive, n));
}

double lorentzian(double detuning, double linewidth) {
  const double g2 = linewidth * linewidth;
  return g2 / (detuning * detuning + g2);
}

double resonance_map_value(const CoupledSystem& system, const FieldDrive& drive, double linewidth) {
  const auto& model = system.stark();
  const auto args = bessel_args(model, drive);
  const int half = sideband_half_width(args);
  const auto amps = besselx::gen_bessel_orders(-half, half, args.x, args.y);
  const double base = mean_energy(model, drive);
  const double w02 = system.omega0() * system.omega0();
  double value = 0.0;
  for (int n = -half; n <= half; ++n) {
    const double a = amps[static_cast<std::size_t>(n + half)];
    value += w02 * a * a * lorentzian(base - n * drive.omega(), linewidth);
  }
  return value;
}

GridValues resonance_map(const CoupledSystem& system, double omega, const FieldGrid& grid,
                         double linewidth, unsigned workers) {
  grid.f_static.validate("resonance_map f_static axis");
  grid.f_rf.validate("resonance_map f_rf axis");
  if (!(linewidth > 0.0)) throw DomainError("resonance_map: linewidth must be > 0");
  GridValues out{grid, std::vector<double>(grid.size(), 0.0), std::vector<int>(grid.size(), 0)};
  const std::size_t cols = grid.f_static.steps;
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    const FieldDrive drive(grid.f_static.at(i % cols), grid.f_rf.at(i / cols), omega);
    out.values[i] = resonance_map_value(system, drive, linewidth);
  });
  return out;
}

std::vector<BoundaryLine> classical_boundaries(const CoupledSystem& system) {
  const auto fields = crossing_fields(system.stark());
  if (system.stark().kind() == StarkKind::Linear) {
    const double f = fields.front();
    return {{1.0, 1.0, f, "F_S + F_RF = F_cross"}, {1.0, -1.0, f, "F_S - F_RF = F_cross"}};
  }
  const double f = fields.back();
  return {{1.0, 1.0, f, "F_S + F_RF = F_cross"},
          {1.0, -1.0, f, "F_S - F_RF = F_cross"},
          {1.0, -1.0, -f, "F_S - F_RF = -F_cross"}};
}

}  // namespace rfdress::floquet
