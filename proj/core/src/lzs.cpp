#include "rfdress/lzs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace rfdress::lzs {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTangential = 1e-8;

// Lanczos approximation, g = 7, n = 9 (the coefficient set popularized by
// Numerical Recipes / Godfrey); about 15 significant digits for Re z > 0.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

std::string boundary_name(double f_cross, bool at_maximum) {
  // at_maximum: F_S + F_RF touches the crossing field; otherwise F_S - F_RF.
  std::string lhs = at_maximum ? "F_S + F_RF = " : "F_S - F_RF = ";
  return lhs + (f_cross < 0.0 ? "-F_cross" : "F_cross");
}

double wrap_time(double t, double period) {
  double r = std::fmod(t, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

// Crossing time of cycle-unrolled index j (j may exceed the event count).
double unrolled_time(const std::vector<CrossingEvent>& ev, std::size_t j, double period) {
  const std::size_t k = ev.size();
  return ev[j % k].t + static_cast<double>(j / k) * period;
}

Transfer2x2 passage_matrix(const CrossingEvent& e, double coupling) {
  const auto m = crossing_matrix(crossing_params(coupling, e.slope));
  return e.rising ? m.transpose() : m;
}

std::vector<CrossingEvent> require_crossings(const CoupledSystem& system, const FieldDrive& drive) {
  auto ev = crossings_per_cycle(system, drive);
  if (ev.empty()) throw DomainError("lzs: drive never reaches a crossing field (classically forbidden)");
  return ev;
}

void check_segment(std::size_t start_segment, std::size_t count) {
  if (start_segment >= count) {
    throw DomainError("lzs: start_segment " + std::to_string(start_segment) + " out of range for " +
                      std::to_string(count) + " crossings");
  }
}

}  // namespace

std::vector<CrossingEvent> crossings_per_cycle(const CoupledSystem& system, const FieldDrive& drive) {
  const auto& model = system.stark();
  std::vector<CrossingEvent> out;
  if (drive.f_rf() == 0.0) return out;

  const double w = drive.omega();
  const double period = drive.period();
  for (double fc : crossing_fields(model)) {
    const double u = (fc - drive.f_static()) / drive.f_rf();
    if (std::fabs(u) > 1.0) continue;
    const double a = std::acos(u);
    if (std::sin(a) < kTangential) throw DegenerateGeometry("lzs: tangential crossing on " + boundary_name(fc, u > 0.0));
    for (double psi : {a, 2.0 * kPi - a}) {
      CrossingEvent e;
      e.t = wrap_time((psi - drive.phase()) / w, period);
      e.field = fc;
      const double dw_dt = model.slope2(fc) * (-drive.f_rf() * w * std::sin(psi));
      e.slope = std::fabs(dw_dt);
      e.rising = dw_dt > 0.0;
      e.branch = fc >= 0.0 ? Branch::Plus : Branch::Minus;
      out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [](const CrossingEvent& x, const CrossingEvent& y) { return x.t < y.t; });
  return out;
}

std::complex<double> lgamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) throw DomainError("lgamma: requires Re z > 0");
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double stokes_phase(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("stokes_phase: delta must be > 0");
  return 0.25 * kPi + lgamma(cplx(1.0, -delta)).imag() + delta * (std::log(delta) - 1.0);
}

LzsParams crossing_params(double coupling, double slope) {
  if (!(slope > 0.0)) throw DomainError("crossing_params: slope must be > 0");
  LzsParams p;
  p.delta = coupling * coupling / slope;
  p.epsilon = -std::expm1(-2.0 * kPi * p.delta);
  p.phi = p.delta > 0.0 ? stokes_phase(p.delta) : 0.25 * kPi;
  return p;
}

double phase_integral(const CoupledSystem& system, const FieldDrive& drive, double t_i, double t_j) {
  const auto& m = system.stark();
  const double w = drive.omega();
  const double fs = drive.f_static();
  const double fr = drive.f_rf();
  auto antiderivative = [&](double t) {
    const double psi = w * t + drive.phase();
    if (m.kind() == StarkKind::Linear) return (m.w0() - m.k() * fs) * t - m.k() * fr * std::sin(psi) / w;
    const double a = m.alpha();
    return (m.w0() - 0.5 * a * (fs * fs + 0.5 * fr * fr)) * t - a * fs * fr * std::sin(psi) / w -
           a * fr * fr * std::sin(2.0 * psi) / (8.0 * w);
  };
  return 0.5 * (antiderivative(t_j) - antiderivative(t_i));
}

Transfer2x2 crossing_matrix(const LzsParams& p) {
  const double c = std::sqrt(1.0 - p.epsilon);
  const double s = std::sqrt(p.epsilon);
  return {c, s * std::polar(1.0, -p.phi), -s * std::polar(1.0, p.phi), c};
}

Transfer2x2 phase_matrix(double theta) { return {std::polar(1.0, theta), 0.0, 0.0, std::polar(1.0, -theta)}; }

Transfer2x2 one_cycle_matrix(const CoupledSystem& system, const FieldDrive& drive, std::size_t start_segment) {
  const auto ev = require_crossings(system, drive);
  check_segment(start_segment, ev.size());
  const double period = drive.period();
  Transfer2x2 s = Transfer2x2::identity();
  for (std::size_t j = start_segment; j < start_segment + ev.size(); ++j) {
    s = passage_matrix(ev[j % ev.size()], system.coupling()) * s;
    const double theta =
        phase_integral(system, drive, unrolled_time(ev, j, period), unrolled_time(ev, j + 1, period));
    s = phase_matrix(theta) * s;
  }
  return s;
}

double chebyshev_u(int n, double xi) {
  if (n < -1) throw DomainError("chebyshev_u: order must be >= -1");
  if (n == -1) return 0.0;
  auto recurrence = [&] {
    double prev = 0.0;
    double cur = 1.0;
    for (int k = 0; k < n; ++k) {
      const double next = 2.0 * xi * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  };
  if (n <= 32) return recurrence();
  const double np1 = static_cast<double>(n + 1);
  if (std::fabs(xi) <= 1.0) {
    const double theta = std::acos(xi);
    const double s = std::sin(theta);
    if (s > 1e-6) return std::sin(np1 * theta) / s;
    return recurrence();
  }
  const double eta = std::acosh(std::fabs(xi));
  const double sh = std::sinh(eta);
  if (sh > 1e-6) {
    const double sign = (xi < 0.0 && (n & 1)) ? -1.0 : 1.0;
    return sign * std::sinh(np1 * eta) / sh;
  }
  return recurrence();
}

double interference_factor(const CoupledSystem& system, const FieldDrive& drive, std::size_t start_segment) {
  const auto ev = require_crossings(system, drive);
  check_segment(start_segment, ev.size());
  const double period = drive.period();
  const std::size_t end = start_segment + ev.size();
  const double t_begin = unrolled_time(ev, start_segment, period);
  const double t_end = unrolled_time(ev, end, period);
  // One transfer per path: |a> up to crossing j, |b> afterwards.
  cplx amplitude = 0.0;
  for (std::size_t j = start_segment; j < end; ++j) {
    const double tj = unrolled_time(ev, j, period);
    const auto m = passage_matrix(ev[j % ev.size()], system.coupling());
    const double before = phase_integral(system, drive, t_begin, tj);
    const double after = phase_integral(system, drive, tj, t_end);
    amplitude += std::polar(1.0, before - after) * m(1, 0);
  }
  return std::norm(amplitude);
}

double population_b(const CoupledSystem& system, const FieldDrive& drive, int n_cycles, std::size_t start_segment,
                    Mode mode) {
  if (n_cycles < 1) throw DomainError("population_b: n_cycles must be >= 1");
  if (mode == Mode::NearDiabatic) {
    const double factor = interference_factor(system, drive, start_segment);
    const double total = phase_integral(system, drive, 0.0, drive.period());
    const double u = chebyshev_u(n_cycles - 1, std::cos(total));
    return factor * u * u;
  }
  const auto s = one_cycle_matrix(system, drive, start_segment);
  const double xi = 0.5 * s.trace().real();
  const double u = chebyshev_u(n_cycles - 1, xi);
  return std::min(1.0, std::norm(s(1, 0)) * u * u);
}

GridValues lzs_map(const CoupledSystem& system, double omega, const FieldGrid& grid, int n_cycles, unsigned workers,
                   std::size_t start_segment, Mode mode) {
  grid.f_static.validate("lzs_map f_static axis");
  grid.f_rf.validate("lzs_map f_rf axis");
  if (n_cycles < 1) throw DomainError("lzs_map: n_cycles must be >= 1");
  GridValues out{grid, std::vector<double>(grid.size(), 0.0), std::vector<int>(grid.size(), kForbidden)};
  const std::size_t cols = grid.f_static.steps;
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    const FieldDrive drive(grid.f_static.at(i % cols), grid.f_rf.at(i / cols), omega);
    try {
      const auto ev = crossings_per_cycle(system, drive);
      if (ev.empty()) return;
      // Fewer crossings than the requested segment index: fall back to the
      // default start rather than leaving a hole in the map.
      const std::size_t seg = start_segment < ev.size() ? start_segment : 0;
      out.values[i] = population_b(system, drive, n_cycles, seg, mode);
      out.flags[i] = kAllowed;
    } catch (const DegenerateGeometry&) {
      out.flags[i] = kDegenerate;
    }
  });
  return out;
}

}  // namespace rfdress::lzs
