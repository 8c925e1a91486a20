#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rfdress/core.hpp"

// Monte-Carlo pairs in the two-cylinder geometry: a probe atom at the origin
// and a partner drawn from a Gaussian ellipsoid centred a distance d away.
namespace rfdress::ensemble {

// mu_product (a0^2 e^2) / r^3 (um^3) in rad/us: E_h / hbar * (a0 / um)^3.
// The angular factor of the dipole-dipole operator is averaged out.
inline constexpr double kHartreeRadPerUs = 4.1341373335e10;
inline constexpr double kBohrUm = 5.29177210903e-5;
inline constexpr double kDipoleRadPerUs = kHartreeRadPerUs * kBohrUm * kBohrUm * kBohrUm;  // 6.12616e-3

// Pair coupling V_dd in rad/us.
double dipole_coupling(double mu_product, double r_um);

struct PairGeometry {
  double d = 25.0;            // um, probe to ellipsoid centre
  double sigma_long = 200.0;  // um, along the cylinder axis (x)
  double sigma_trans = 8.0;   // um, y and z
  double mu_product = 800.0 * 800.0;

  void validate() const;
};

struct PairEnsemble {
  std::uint64_t seed = 0;
  PairGeometry geometry;
  std::vector<std::array<double, 3>> positions;  // offsets (x, y, z) in um
  std::vector<double> distances;                 // sqrt(x^2 + (y + d)^2 + z^2)
  std::vector<double> couplings;                 // V_dd, rad/us
};

// Pair i draws its offsets from its own generator, seeded from (seed, i):
// std::mt19937_64 through std::seed_seq, Box-Muller normals. The stream is
// fixed by the standard, so results do not depend on platform or worker count.
PairEnsemble sample_ensemble(const PairGeometry& geometry, std::size_t count, std::uint64_t seed,
                             unsigned workers = 1);

// Ensemble with explicitly given offsets (seed recorded as 0).
PairEnsemble from_positions(const PairGeometry& geometry, std::vector<std::array<double, 3>> positions);

// Mean over pairs of sin^2(V_i |J_n| t): each pair Rabi-flops at
// Omega_n = 2 V_i |J_n| on resonance.
double pp_fraction(const PairEnsemble& ensemble, const StarkModel& model, const FieldDrive& drive, int n, double t,
                   unsigned workers = 1);

// F_eff of the n-photon resonance, sqrt(2 (W0 - n omega) / alpha). Quadratic
// models only; DomainError when W0 - n omega < 0.
double resonance_effective_field(const StarkModel& model, double omega, int n);

struct ArcOnset {
  // Angle where the drive first reaches +-F_cross (0 if reached at theta = 0).
  std::optional<double> one_crossing;
  // Angle where F_S - F_RF reaches -F_cross.
  std::optional<double> two_crossing;
};

// Classical-boundary angles along the constant-F_eff arc of resonance n.
ArcOnset classical_onset(const StarkModel& model, double omega, int n);

struct ScanCurve {
  int n = 0;
  double f_eff = 0.0;
  std::vector<double> theta;
  std::vector<double> pp_fraction;
  std::vector<double> bessel_squared;  // J_n^2 along the arc, the weak-coupling shape
};

// pp_fraction along the constant-F_eff arc of resonance n for every theta.
ScanCurve mixing_angle_scan(const PairEnsemble& ensemble, const StarkModel& model, double omega, int n,
                            const std::vector<double>& thetas, double t, unsigned workers = 1);

}  // namespace rfdress::ensemble
