#include "rfdress/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rfdress/errors.hpp"
#include "rfdress/floquet.hpp"
#include "rfdress/grid.hpp"

namespace rfdress::classical {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_rf(const FieldDrive& drive) {
  if (!(drive.f_rf() > 0.0)) {
    throw DomainError("classical density: F_RF = 0 gives a delta distribution");
  }
}

double branch_density(const StarkModel& model, const FieldDrive& drive, double w, Branch branch) {
  const double r2 = 2.0 * (model.w0() - w) / model.alpha();
  if (r2 < 0.0) return 0.0;
  const double r = std::sqrt(r2);
  const double f = branch == Branch::Positive ? r : -r;
  const double pf = field_density(drive, f);
  if (pf == 0.0) return 0.0;
  if (r == 0.0) return kInf;
  return pf / (model.alpha() * r);
}

}  // namespace

double field_density(const FieldDrive& drive, double f) {
  require_rf(drive);
  const double u = f - drive.f_static();
  const double a = drive.f_rf();
  if (std::fabs(u) > a) return 0.0;
  const double d = a * a - u * u;
  if (d <= 0.0) return kInf;
  return 1.0 / (std::numbers::pi * std::sqrt(d));
}

double field_cdf(const FieldDrive& drive, double f) {
  require_rf(drive);
  const double u = (f - drive.f_static()) / drive.f_rf();
  if (u <= -1.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return 0.5 + std::asin(u) / std::numbers::pi;
}

double energy_density_branch(const StarkModel& model, const FieldDrive& drive, double w, Branch branch) {
  if (model.kind() != StarkKind::Quadratic) throw DomainError("energy_density_branch: quadratic models only");
  require_rf(drive);
  return branch_density(model, drive, w, branch);
}

double energy_density(const StarkModel& model, const FieldDrive& drive, double w) {
  require_rf(drive);
  if (model.kind() == StarkKind::Linear) {
    const double f = (model.w0() - w) / model.k();
    return field_density(drive, f) / std::fabs(model.k());
  }
  if (w == model.w0()) {
    // Both roots merge at F = 0, where dW2/dF vanishes.
    return field_density(drive, 0.0) > 0.0 ? kInf : 0.0;
  }
  return branch_density(model, drive, w, Branch::Positive) + branch_density(model, drive, w, Branch::Negative);
}

double energy_mass(const StarkModel& model, const FieldDrive& drive, double lo, double hi) {
  require_rf(drive);
  if (hi < lo) std::swap(lo, hi);
  if (model.kind() == StarkKind::Linear) {
    double a = (model.w0() - hi) / model.k();
    double b = (model.w0() - lo) / model.k();
    if (b < a) std::swap(a, b);
    return field_cdf(drive, b) - field_cdf(drive, a);
  }
  if (lo >= model.w0()) return 0.0;
  const double r_inner = std::sqrt(std::max(0.0, 2.0 * (model.w0() - hi) / model.alpha()));
  const double r_outer = std::sqrt(2.0 * (model.w0() - lo) / model.alpha());
  return (field_cdf(drive, r_outer) - field_cdf(drive, r_inner)) +
         (field_cdf(drive, -r_inner) - field_cdf(drive, -r_outer));
}

std::vector<double> asymptotes(const StarkModel& model, const FieldDrive& drive) {
  require_rf(drive);
  const double f_hi = drive.f_static() + drive.f_rf();
  const double f_lo = drive.f_static() - drive.f_rf();
  std::vector<double> out{model.energy2(f_hi), model.energy2(f_lo)};
  if (model.kind() == StarkKind::Quadratic && f_lo < 0.0 && f_hi > 0.0) out.push_back(model.w0());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Support energy_support(const StarkModel& model, const FieldDrive& drive) {
  const double f_hi = drive.f_static() + drive.f_rf();
  const double f_lo = drive.f_static() - drive.f_rf();
  const double a = model.energy2(f_hi);
  const double b = model.energy2(f_lo);
  Support s{std::min(a, b), std::max(a, b)};
  if (model.kind() == StarkKind::Quadratic && f_lo < 0.0 && f_hi > 0.0) s.max = model.w0();
  return s;
}

DensityCurve sample_energy_density(const StarkModel& model, const FieldDrive& drive, double lo, double hi,
                                   std::size_t steps) {
  const Axis axis{lo, hi, steps};
  axis.validate("sample_energy_density");
  DensityCurve curve;
  curve.asymptotes = asymptotes(model, drive);
  const double half_step = 0.5 * axis.spacing();
  curve.abscissa.reserve(steps);
  curve.density.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double w = axis.at(i);
    const bool near = std::any_of(curve.asymptotes.begin(), curve.asymptotes.end(),
                                  [&](double a) { return std::fabs(w - a) <= half_step; });
    curve.abscissa.push_back(w);
    curve.density.push_back(near ? kInf : energy_density(model, drive, w));
  }
  return curve;
}

std::vector<double> moving_average(const std::vector<double>& values, std::size_t window) {
  if (window == 0) throw DomainError("moving_average: window must be >= 1");
  const std::size_t half = window / 2;
  std::vector<double> out(values.size(), 0.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(values.size() - 1, i + (window - 1 - half));
    double sum = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) sum += values[j];
    out[i] = sum / static_cast<double>(hi - lo + 1);
  }
  return out;
}

std::size_t auto_window(const StarkModel& model, const FieldDrive& drive) {
  const auto s = energy_support(model, drive);
  const double sidebands = (s.max - s.min) / drive.omega();
  return static_cast<std::size_t>(std::max(1L, std::lround(std::numbers::pi * std::sqrt(sidebands / 12.0))));
}

std::vector<Comparison> sideband_vs_classical(const StarkModel& model, double f_static, double f_rf,
                                              const std::vector<double>& omegas, std::size_t window,
                                              unsigned workers) {
  std::vector<Comparison> out(omegas.size());
  parallel_for(omegas.size(), workers, [&](std::size_t k) {
    const FieldDrive drive(f_static, f_rf, omegas[k]);
    const auto spec = floquet::spectrum(model, drive);
    Comparison& c = out[k];
    c.omega = drive.omega();
    c.window = window == 0 ? auto_window(model, drive) : window;
    c.asymptotes = asymptotes(model, drive);
    c.support = energy_support(model, drive);

    std::vector<double> pops;
    pops.reserve(spec.sidebands.size());
    for (const auto& s : spec.sidebands) pops.push_back(s.population);
    const auto avg = moving_average(pops, c.window);

    const double half_step = 0.5 * drive.omega();
    c.rows.reserve(spec.sidebands.size());
    for (std::size_t i = 0; i < spec.sidebands.size(); ++i) {
      const auto& s = spec.sidebands[i];
      const bool near = std::any_of(c.asymptotes.begin(), c.asymptotes.end(),
                                    [&](double a) { return std::fabs(s.energy - a) < half_step; });
      const double scaled = near ? kInf : drive.omega() * energy_density(model, drive, s.energy);
      c.rows.push_back({s.n, s.energy, s.population, scaled, avg[i]});
    }
  });
  return out;
}

Deviation classical_deviation(const Comparison& comparison, double margin_factor) {
  auto distance = [&](double w) {
    double d = kInf;
    for (double a : comparison.asymptotes) d = std::min(d, std::fabs(w - a));
    return d;
  };
  const double margin = margin_factor * comparison.omega;
  Deviation dev;
  double sum = 0.0;
  for (const auto& row : comparison.rows) {
    if (row.energy <= comparison.support.min || row.energy >= comparison.support.max) continue;
    if (!std::isfinite(row.classical_scaled) || row.classical_scaled <= 0.0) continue;
    if (distance(row.energy) < margin) continue;
    sum += std::fabs(row.moving_average - row.classical_scaled) / row.classical_scaled;
    ++dev.samples;
  }
  dev.mean_relative = dev.samples > 0 ? sum / static_cast<double>(dev.samples) : kInf;
  return dev;
}

}  // namespace rfdress::classical
