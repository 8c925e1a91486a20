#pragma once

#include <cstddef>
#include <vector>

#include "rfdress/core.hpp"

// Classical limit of the sideband populations: the distribution of energies
// that W2(F(t)) visits when the RF phase is uniformly distributed.
namespace rfdress::classical {

// Arcsine law of the instantaneous field, 1 / (pi sqrt(F_RF^2 - (f - F_S)^2))
// inside (F_S - F_RF, F_S + F_RF), 0 outside, +inf at the turning points.
// Throws DomainError for F_RF = 0 (the distribution is a delta).
double field_density(const FieldDrive& drive, double f);

// Probability that the field lies below f.
double field_cdf(const FieldDrive& drive, double f);

// Which root of W2(F) = w a quadratic-model contribution comes from.
enum class Branch { Positive, Negative };

// Push-forward of field_density through W2(F). Quadratic models add the
// contributions of the F > 0 and F < 0 roots.
double energy_density(const StarkModel& model, const FieldDrive& drive, double w);

// Single-root contribution (quadratic models only).
double energy_density_branch(const StarkModel& model, const FieldDrive& drive, double w, Branch branch);

// Exact probability mass of W2 in [lo, hi], from the arcsine CDF.
double energy_mass(const StarkModel& model, const FieldDrive& drive, double lo, double hi);

// Energies at which the density diverges, ascending: the images of the two
// field turning points, plus W0 when the field passes through zero in the
// quadratic case.
std::vector<double> asymptotes(const StarkModel& model, const FieldDrive& drive);

struct Support {
  double min = 0.0;
  double max = 0.0;
};
Support energy_support(const StarkModel& model, const FieldDrive& drive);

struct DensityCurve {
  std::vector<double> abscissa;
  std::vector<double> density;  // +inf within half a step of an asymptote
  std::vector<double> asymptotes;
};

// Samples energy_density on `steps` points spanning [lo, hi].
DensityCurve sample_energy_density(const StarkModel& model, const FieldDrive& drive, double lo, double hi,
                                   std::size_t steps);

// Moving-average window (in sidebands) matched to the local period of the
// population oscillation three sidebands inside a turning point. There the
// Bessel phase advances by about sqrt(2 * 3 / x) per sideband, so one period
// of J_n^2 spans pi * sqrt(x / 6) = pi * sqrt(S / 12) sidebands, S being the
// number of sidebands across the classical support.
std::size_t auto_window(const StarkModel& model, const FieldDrive& drive);

struct ComparisonRow {
  int n = 0;
  double energy = 0.0;           // rad/us
  double population = 0.0;
  double classical_scaled = 0.0; // omega * energy_density, +inf near an asymptote
  double moving_average = 0.0;
};

struct Comparison {
  double omega = 0.0;
  std::size_t window = 0;
  std::vector<ComparisonRow> rows;  // n ascending
  std::vector<double> asymptotes;
  Support support;
};

// Centered moving average over `window` neighbours; shrinks at the ends.
std::vector<double> moving_average(const std::vector<double>& values, std::size_t window);

// For each omega, the sideband populations of the drive (f_static, f_rf,
// omega) next to the classical density scaled by omega. A window of 0 selects
// auto_window per omega.
std::vector<Comparison> sideband_vs_classical(const StarkModel& model, double f_static, double f_rf,
                                              const std::vector<double>& omegas, std::size_t window = 0,
                                              unsigned workers = 1);

struct Deviation {
  double mean_relative = 0.0;  // +inf when no sideband qualifies
  std::size_t samples = 0;
};

// Mean |moving_average - classical| / classical over sidebands strictly inside
// the classical support that keep at least margin_factor * omega away from
// every asymptote.
Deviation classical_deviation(const Comparison& comparison, double margin_factor = 3.0);

}  // namespace rfdress::classical
