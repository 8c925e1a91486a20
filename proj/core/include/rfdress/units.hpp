#pragma once

#include <numbers>

// Internal unit system: energies and frequencies in rad/us, fields in V/cm,
// times in us. User-facing values are ordinary MHz and are converted here.
namespace rfdress::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double from_mhz(double mhz) { return kTwoPi * mhz; }
constexpr double to_mhz(double rad_per_us) { return rad_per_us / kTwoPi; }

// Period in us of a drive with angular frequency omega (rad/us).
constexpr double period(double omega) { return kTwoPi / omega; }

}  // namespace rfdress::units
