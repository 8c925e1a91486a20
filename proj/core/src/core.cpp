#include "rfdress/core.hpp"

#include <cmath>
#include <numbers>

#include "rfdress/errors.hpp"
#include "rfdress/units.hpp"

namespace rfdress {

FieldDrive::FieldDrive(double f_static, double f_rf, double omega, double phase)
    : f_static_(f_static), f_rf_(f_rf), omega_(omega), phase_(phase) {
  if (!std::isfinite(f_static) || !std::isfinite(f_rf) || !(f_rf >= 0.0)) {
    throw DomainError("FieldDrive: f_rf must be finite and >= 0");
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("FieldDrive: omega must be > 0");
  }
}

double FieldDrive::period() const { return units::period(omega_); }

StarkModel StarkModel::linear(double w0, double k) {
  return StarkModel(StarkKind::Linear, w0, k, 0.0);
}

StarkModel StarkModel::quadratic(double w0, double alpha) {
  return StarkModel(StarkKind::Quadratic, w0, 0.0, alpha);
}

double StarkModel::energy2(double field) const {
  if (kind_ == StarkKind::Linear) return w0_ - k_ * field;
  return w0_ - 0.5 * alpha_ * field * field;
}

double StarkModel::slope2(double field) const {
  if (kind_ == StarkKind::Linear) return -k_;
  return -alpha_ * field;
}

CoupledSystem::CoupledSystem(StarkModel stark, double omega0)
    : stark_(stark), omega0_(omega0) {
  if (!(omega0 >= 0.0) || !std::isfinite(omega0)) {
    throw DomainError("CoupledSystem: omega0 must be finite and >= 0");
  }
}

double field_at(const FieldDrive& drive, double t) {
  return drive.f_static() + drive.f_rf() * std::cos(drive.omega() * t + drive.phase());
}

std::vector<double> crossing_fields(const StarkModel& model) {
  if (model.kind() == StarkKind::Linear) {
    if (model.k() == 0.0) throw DomainError("crossing_fields: k must be nonzero");
    return {model.w0() / model.k()};
  }
  if (!(model.alpha() > 0.0) || !(model.w0() > 0.0)) {
    throw DomainError("crossing_fields: quadratic model needs w0 > 0 and alpha > 0");
  }
  const double f = std::sqrt(2.0 * model.w0() / model.alpha());
  return {-f, f};
}

double energy2_at_time(const StarkModel& model, const FieldDrive& drive, double t) {
  return model.energy2(field_at(drive, t));
}

double effective_field(const FieldDrive& drive) {
  return std::sqrt(drive.f_static() * drive.f_static() + 0.5 * drive.f_rf() * drive.f_rf());
}

double mixing_angle(const FieldDrive& drive) {
  if (drive.f_static() == 0.0 && drive.f_rf() == 0.0) {
    throw DomainError("mixing_angle: undefined for zero static and RF field");
  }
  return std::atan2(drive.f_rf(), std::numbers::sqrt2 * drive.f_static());
}

ArcPoint arc_point(double f_eff, double theta) {
  if (!(f_eff >= 0.0)) throw DomainError("arc_point: f_eff must be >= 0");
  // Exact endpoints: cos(pi/2) is not zero in floating point.
  if (theta == 0.5 * std::numbers::pi) return {0.0, std::numbers::sqrt2 * f_eff};
  return {f_eff * std::cos(theta), std::numbers::sqrt2 * f_eff * std::sin(theta)};
}

namespace presets {

StarkModel left_resonance() {
  return StarkModel::quadratic(units::from_mhz(kW0Mhz), units::from_mhz(kAlphaLeftMhz));
}

StarkModel right_resonance() {
  return StarkModel::quadratic(units::from_mhz(kW0Mhz), units::from_mhz(kAlphaRightMhz));
}

StarkModel fig2_linear() {
  return StarkModel::linear(units::from_mhz(kLinearPresetW0Mhz), units::from_mhz(kLinearPresetKMhz));
}

std::optional<StarkModel> by_name(std::string_view name) {
  if (name == "left-resonance") return left_resonance();
  if (name == "right-resonance") return right_resonance();
  if (name == "fig2-linear") return fig2_linear();
  return std::nullopt;
}

std::vector<std::string> names() { return {"left-resonance", "right-resonance", "fig2-linear"}; }

}  // namespace presets

}  // namespace rfdress
