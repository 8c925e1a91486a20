#pragma once

#include <string>
#include <vector>

#include "rfdress/core.hpp"
#include "rfdress/grid.hpp"

namespace rfdress::floquet {

struct Sideband {
  int n = 0;
  double energy = 0.0;     // rad/us
  double amplitude = 0.0;  // signed Bessel amplitude
  double population = 0.0;
};

struct SidebandSpectrum {
  FieldDrive drive;
  StarkModel model;
  std::vector<Sideband> sidebands;  // n ascending
  int n_min = 0;
  int n_max = 0;

  const Sideband& at(int n) const { return sidebands.at(static_cast<std::size_t>(n - n_min)); }
  double total_population() const;
};

// Bessel arguments of the sideband amplitudes for this drive:
// (k F_RF / w, 0) for a linear model,
// (alpha F_RF F_S / w, alpha F_RF^2 / (8 w)) for a quadratic one.
struct BesselArgs {
  double x = 0.0;
  double y = 0.0;
};
BesselArgs bessel_args(const StarkModel& model, const FieldDrive& drive);

// Half-width N of the sideband range [-N, N]: ceil(|x| + 2|y|) + 40.
int sideband_half_width(const BesselArgs& args);

// Energy of the n = 0 sideband: the cycle-averaged W2.
double mean_energy(const StarkModel& model, const FieldDrive& drive);

double sideband_energy(const StarkModel& model, const FieldDrive& drive, int n);

SidebandSpectrum spectrum(const StarkModel& model, const FieldDrive& drive);

// Signed sideband amplitude J_n(...) for the model's case.
double sideband_amplitude(const StarkModel& model, const FieldDrive& drive, int n);

// (W0 - k F_S) - n w, or (W0 - alpha F_eff^2 / 2) - n w; zero on resonance.
double resonance_detuning(const CoupledSystem& system, const FieldDrive& drive, int n);

// Omega_n = Omega_0 |J_n(...)|.
double coupling_strength(const CoupledSystem& system, const FieldDrive& drive, int n);
// Omega_0 J_n(...), sign retained.
double coupling_amplitude(const CoupledSystem& system, const FieldDrive& drive, int n);

// Peak-normalized Lorentzian, 1 at zero detuning, half-width `linewidth`.
double lorentzian(double detuning, double linewidth);

inline constexpr double kDefaultLinewidthMhz = 0.2;

// Sum over sidebands of Omega_n^2 * lorentzian(detuning_n) at each grid
// point. Values are bit-identical for any worker count.
GridValues resonance_map(const CoupledSystem& system, double omega, const FieldGrid& grid,
                         double linewidth, unsigned workers = 1);

// The map value at a single point; what resonance_map evaluates per cell.
double resonance_map_value(const CoupledSystem& system, const FieldDrive& drive, double linewidth);

// Line s * F_S + r * F_RF = c in the (F_S, F_RF) plane.
struct BoundaryLine {
  double s = 0.0;
  double r = 0.0;
  double c = 0.0;
  std::string label;

  // Signed distance-like residual; zero on the line.
  double residual(double f_static, double f_rf) const { return s * f_static + r * f_rf - c; }
};

// Drive settings for which the crossing is reached exactly at an extremum of
// the RF cycle. Linear: F_S +- F_RF = F_lin. Quadratic: F_S + F_RF = F_q,
// F_S - F_RF = F_q, and F_S - F_RF = -F_q (onset of the two-crossing region).
std::vector<BoundaryLine> classical_boundaries(const CoupledSystem& system);

}  // namespace rfdress::floquet
