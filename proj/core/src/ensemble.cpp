#include "rfdress/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "rfdress/errors.hpp"
#include "rfdress/floquet.hpp"
#include "rfdress/grid.hpp"

namespace rfdress::ensemble {

namespace {

double uniform_open(std::mt19937_64& g) {
  // 53 random bits mapped to (0, 1]; log() below never sees zero.
  return (static_cast<double>(g() >> 11) + 1.0) * 0x1p-53;
}

std::array<double, 4> normals(std::mt19937_64& g) {
  std::array<double, 4> out{};
  for (int k = 0; k < 2; ++k) {
    const double r = std::sqrt(-2.0 * std::log(uniform_open(g)));
    const double a = 2.0 * std::numbers::pi * uniform_open(g);
    out[2 * k] = r * std::cos(a);
    out[2 * k + 1] = r * std::sin(a);
  }
  return out;
}

double distance(const PairGeometry& g, const std::array<double, 3>& p) {
  const double y = p[1] + g.d;
  return std::sqrt(p[0] * p[0] + y * y + p[2] * p[2]);
}

}  // namespace

double dipole_coupling(double mu_product, double r_um) {
  if (!(r_um > 0.0)) throw DomainError("dipole_coupling: distance must be > 0");
  return kDipoleRadPerUs * mu_product / (r_um * r_um * r_um);
}

void PairGeometry::validate() const {
  if (!(d > 0.0) || !(sigma_long > 0.0) || !(sigma_trans > 0.0)) {
    throw DomainError("PairGeometry: d, sigma_long and sigma_trans must be > 0");
  }
  if (!(mu_product > 0.0)) throw DomainError("PairGeometry: mu_product must be > 0");
}

PairEnsemble sample_ensemble(const PairGeometry& geometry, std::size_t count, std::uint64_t seed, unsigned workers) {
  geometry.validate();
  if (count == 0) throw DomainError("sample_ensemble: count must be >= 1");
  PairEnsemble e;
  e.seed = seed;
  e.geometry = geometry;
  e.positions.resize(count);
  parallel_for(count, workers, [&](std::size_t i) {
    const auto idx = static_cast<std::uint64_t>(i);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
    std::mt19937_64 g(seq);
    const auto z = normals(g);
    e.positions[i] = {geometry.sigma_long * z[0], geometry.sigma_trans * z[1], geometry.sigma_trans * z[2]};
  });
  e.distances.resize(count);
  e.couplings.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    e.distances[i] = distance(geometry, e.positions[i]);
    e.couplings[i] = dipole_coupling(geometry.mu_product, e.distances[i]);
  }
  return e;
}

PairEnsemble from_positions(const PairGeometry& geometry, std::vector<std::array<double, 3>> positions) {
  geometry.validate();
  PairEnsemble e;
  e.geometry = geometry;
  e.positions = std::move(positions);
  for (const auto& p : e.positions) {
    e.distances.push_back(distance(geometry, p));
    e.couplings.push_back(dipole_coupling(geometry.mu_product, e.distances.back()));
  }
  return e;
}

double pp_fraction(const PairEnsemble& ensemble, const StarkModel& model, const FieldDrive& drive, int n, double t,
                   unsigned workers) {
  if (!(t >= 0.0)) throw DomainError("pp_fraction: t must be >= 0");
  if (ensemble.couplings.empty()) throw DomainError("pp_fraction: empty ensemble");
  const double amp = std::fabs(floquet::sideband_amplitude(model, drive, n));
  std::vector<double> terms(ensemble.couplings.size());
  parallel_for(terms.size(), workers, [&](std::size_t i) {
    const double s = std::sin(ensemble.couplings[i] * amp * t);
    terms[i] = s * s;
  });
  double sum = 0.0;
  for (double x : terms) sum += x;
  return sum / static_cast<double>(terms.size());
}

double resonance_effective_field(const StarkModel& model, double omega, int n) {
  if (model.kind() != StarkKind::Quadratic) throw DomainError("resonance_effective_field: quadratic models only");
  const double shift = model.w0() - static_cast<double>(n) * omega;
  if (shift < 0.0) throw DomainError("resonance_effective_field: no real resonance for this n");
  return std::sqrt(2.0 * shift / model.alpha());
}

ArcOnset classical_onset(const StarkModel& model, double omega, int n) {
  const double f_eff = resonance_effective_field(model, omega, n);
  const double f_cross = crossing_fields(model).back();
  // Along the arc F_S -+ F_RF = sqrt(3) F_eff cos(theta +- atan(sqrt 2)).
  const double tilt = std::atan(std::numbers::sqrt2);
  const double r = f_cross / (std::sqrt(3.0) * f_eff);
  ArcOnset out;
  if (f_eff >= f_cross) {
    // F_S + F_RF >= F_eff >= F_cross everywhere: onset at F_S - F_RF = F_cross.
    out.one_crossing = std::max(0.0, std::acos(std::min(1.0, r)) - tilt);
  } else if (r <= 1.0) {
    out.one_crossing = tilt - std::acos(r);
  }
  if (r <= 1.0) {
    const double a = std::acos(-r) - tilt;
    if (a <= 0.5 * std::numbers::pi) out.two_crossing = a;
  }
  return out;
}

ScanCurve mixing_angle_scan(const PairEnsemble& ensemble, const StarkModel& model, double omega, int n,
                            const std::vector<double>& thetas, double t, unsigned workers) {
  ScanCurve c;
  c.n = n;
  c.f_eff = resonance_effective_field(model, omega, n);
  c.theta = thetas;
  c.pp_fraction.resize(thetas.size());
  c.bessel_squared.resize(thetas.size());
  parallel_for(thetas.size(), workers, [&](std::size_t i) {
    const auto p = arc_point(c.f_eff, thetas[i]);
    const FieldDrive drive(p.f_static, p.f_rf, omega);
    c.pp_fraction[i] = pp_fraction(ensemble, model, drive, n, t, 1);
    const double a = floquet::sideband_amplitude(model, drive, n);
    c.bessel_squared[i] = a * a;
  });
  return c;
}

}  // namespace rfdress::ensemble
