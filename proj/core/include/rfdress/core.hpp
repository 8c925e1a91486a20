#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rfdress {

// F(t) = f_static + f_rf * cos(omega * t + phase).
//
// Fields in V/cm, omega in rad/us. The phase defaults to zero so that t = 0
// sits on the field maximum; it is only exposed for start-point studies.
class FieldDrive {
 public:
  FieldDrive(double f_static, double f_rf, double omega, double phase = 0.0);

  double f_static() const { return f_static_; }
  double f_rf() const { return f_rf_; }
  double omega() const { return omega_; }
  double phase() const { return phase_; }
  double period() const;

  FieldDrive with_fields(double f_static, double f_rf) const {
    return FieldDrive(f_static, f_rf, omega_, phase_);
  }

 private:
  double f_static_;
  double f_rf_;
  double omega_;
  double phase_;
};

enum class StarkKind { Linear, Quadratic };

// Stark law of state |2>; state |1> is pinned at zero energy.
//   Linear:    W2(F) = w0 - k F
//   Quadratic: W2(F) = w0 - alpha F^2 / 2
class StarkModel {
 public:
  static StarkModel linear(double w0, double k);
  static StarkModel quadratic(double w0, double alpha);

  StarkKind kind() const { return kind_; }
  double w0() const { return w0_; }
  // Only meaningful for Linear.
  double k() const { return k_; }
  // Only meaningful for Quadratic.
  double alpha() const { return alpha_; }

  double energy1(double /*field*/) const { return 0.0; }
  double energy2(double field) const;
  // dW2/dF
  double slope2(double field) const;

 private:
  StarkModel(StarkKind kind, double w0, double k, double alpha)
      : kind_(kind), w0_(w0), k_(k), alpha_(alpha) {}

  StarkKind kind_;
  double w0_;
  double k_;
  double alpha_;
};

// A Stark model plus the bare coupling omega0 = 2 <psi2|V|psi1>, the full
// width of the static avoided crossing (rad/us).
class CoupledSystem {
 public:
  CoupledSystem(StarkModel stark, double omega0);

  const StarkModel& stark() const { return stark_; }
  double omega0() const { return omega0_; }
  // Off-diagonal Hamiltonian element V = omega0 / 2.
  double coupling() const { return 0.5 * omega0_; }

 private:
  StarkModel stark_;
  double omega0_;
};

double field_at(const FieldDrive& drive, double t);

// Fields at which W2 = W1 = 0. Linear: one field; Quadratic: -F, +F ascending.
std::vector<double> crossing_fields(const StarkModel& model);

double energy2_at_time(const StarkModel& model, const FieldDrive& drive, double t);

// sqrt(F_S^2 + F_RF^2 / 2): the static field with the same cycle-averaged
// quadratic shift as the drive.
double effective_field(const FieldDrive& drive);

// arctan(F_RF / (sqrt(2) F_S)) in [0, pi/2] for F_S >= 0.
double mixing_angle(const FieldDrive& drive);

// Inverse of (effective_field, mixing_angle): the drive fields on the
// constant-F_eff arc at angle theta. Returns {f_static, f_rf}.
struct ArcPoint {
  double f_static;
  double f_rf;
};
ArcPoint arc_point(double f_eff, double theta);

// Named parameter sets. Values are stored in internal units.
namespace presets {

inline constexpr double kW0Mhz = 25.15;
inline constexpr double kAlphaLeftMhz = 347.04;
inline constexpr double kAlphaRightMhz = 297.40;
inline constexpr double kLinearPresetW0Mhz = 25.0;
inline constexpr double kLinearPresetKMhz = 60.0;

StarkModel left_resonance();
StarkModel right_resonance();
StarkModel fig2_linear();

// "left-resonance", "right-resonance" or "fig2-linear".
std::optional<StarkModel> by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace presets

}  // namespace rfdress
