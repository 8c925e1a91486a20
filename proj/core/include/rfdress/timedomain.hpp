#pragma once

#include <vector>

#include "rfdress/core.hpp"

// Direct integration of the two coupled amplitude equations
//   i dT1/dt = W1(t) T1 + (omega0 / 2) T2
//   i dT2/dt = W2(t) T2 + (omega0 / 2) T1
// with W1 = 0 and W2(t) = W2(F(t)).
namespace rfdress::timedomain {

enum class Initial { State1, State2 };

struct EvolveOptions {
  // Added to both diagonal energies; a global phase, populations must not move.
  double energy_offset = 0.0;
  // Record every `stride`-th step (the first and last points are always kept).
  std::size_t stride = 1;
  // A run whose |pop1 + pop2 - 1| exceeds this throws NumericError.
  double max_norm_drift = 1e-8;
};

struct EvolutionResult {
  std::vector<double> times;
  std::vector<double> pop1;
  std::vector<double> pop2;
  double norm_drift = 0.0;  // max over every step, not just the recorded ones
  double step = 0.0;        // step actually used, t_end / steps
};

// Default step: period / 4096.
double default_step(const FieldDrive& drive);

// Fixed-step RK4 from t = 0 to t_end. The step is shrunk to t_end / ceil(t_end
// / dt) so the run ends exactly at t_end. Requires 0 < dt <= period / 1000.
EvolutionResult evolve(const CoupledSystem& system, const FieldDrive& drive, double t_end, double dt,
                       Initial initial = Initial::State1, const EvolveOptions& options = {});

// Max |pop2(dt) - pop2(dt / 2)| over the points both runs share.
double convergence_check(const CoupledSystem& system, const FieldDrive& drive, double t_end, double dt,
                         Initial initial = Initial::State1);

}  // namespace rfdress::timedomain
