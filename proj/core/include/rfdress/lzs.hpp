#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rfdress/core.hpp"
#include "rfdress/errors.hpp"
#include "rfdress/grid.hpp"

// Landau-Zener-Stueckelberg propagation: the crossing passages of one RF
// cycle are treated as instantaneous transfer matrices, the stretches in
// between as pure phase evolution.
//
// Inside this namespace energies are symmetric, W_b = -W_a = W2 / 2. State
// |a> is the initially populated state; only populations leave the module,
// so the shifted energy origin never shows outside.
namespace rfdress::lzs {

// A crossing reached exactly at a turning point of the field. The message
// names the boundary line on which the drive sits.
class DegenerateGeometry : public DomainError {
 public:
  explicit DegenerateGeometry(const std::string& what) : DomainError(what) {}
};

enum class Branch { Plus, Minus };

struct CrossingEvent {
  double t = 0.0;      // us, in [0, period)
  double field = 0.0;  // V/cm, one of crossing_fields
  double slope = 0.0;  // |dW2/dt| at t, rad/us^2
  Branch branch = Branch::Plus;
  bool rising = false;  // W2 goes from negative to positive
};

// Time-ordered crossings over one period starting at t = 0. Two events per
// crossing field reached; none when the field never reaches one.
std::vector<CrossingEvent> crossings_per_cycle(const CoupledSystem& system, const FieldDrive& drive);

struct LzsParams {
  double delta = 0.0;
  double epsilon = 0.0;
  double phi = 0.0;
};

// pi/4 + arg Gamma(1 - i delta) + delta (ln delta - 1).
double stokes_phase(double delta);

// ln Gamma(z) for Re z > 0 (Lanczos, g = 7, nine terms). The imaginary part
// is the continuous branch of arg Gamma, not reduced modulo 2 pi.
std::complex<double> lgamma(std::complex<double> z);

// Parameters of a crossing with coupling V = omega0 / 2 and sweep rate
// |dW2/dt|. delta = V^2 / slope.
LzsParams crossing_params(double coupling, double slope);

// Integral of W_b = W2 / 2 from t_i to t_j, in closed form.
double phase_integral(const CoupledSystem& system, const FieldDrive& drive, double t_i, double t_j);

class Transfer2x2 {
 public:
  using value_type = std::complex<double>;

  Transfer2x2() = default;
  Transfer2x2(value_type m00, value_type m01, value_type m10, value_type m11) : m_{m00, m01, m10, m11} {}
  static Transfer2x2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  value_type operator()(std::size_t row, std::size_t col) const { return m_[2 * row + col]; }
  value_type det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  value_type trace() const { return m_[0] + m_[3]; }
  Transfer2x2 transpose() const { return {m_[0], m_[2], m_[1], m_[3]}; }
  Transfer2x2 adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
  }

  friend Transfer2x2 operator*(const Transfer2x2& a, const Transfer2x2& b) {
    return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
            a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
  }

 private:
  value_type m_[4]{};
};

// [[sqrt(1-e), sqrt(e) e^{-i phi}], [-sqrt(e) e^{i phi}, sqrt(1-e)]].
Transfer2x2 crossing_matrix(const LzsParams& p);
// diag(e^{i theta}, e^{-i theta}).
Transfer2x2 phase_matrix(double theta);

// Evolution over one RF period for a state that starts in segment
// `start_segment`, the stretch that ends at crossing `start_segment`.
// Segment 0 contains t = 0. A rising crossing contributes M^T, a falling one
// M, each with its own LzsParams.
Transfer2x2 one_cycle_matrix(const CoupledSystem& system, const FieldDrive& drive,
                             std::size_t start_segment = 0);

// Chebyshev polynomial of the second kind, U_n(xi) for n >= -1.
double chebyshev_u(int n, double xi);

enum class Mode {
  Exact,         // |S_ba|^2 U_{N-1}^2(Tr S / 2)
  NearDiabatic,  // interference factor times sin^2(N P) / sin^2(P)
};

// Population of |b> after n_cycles periods, starting in |a>.
double population_b(const CoupledSystem& system, const FieldDrive& drive, int n_cycles,
                     std::size_t start_segment = 0, Mode mode = Mode::Exact);

// The N-independent Stueckelberg factor: |first-order one-cycle transfer
// amplitude|^2. Equals 4 eps sin^2(Theta_12 + phi) for a single crossing
// field and the four-crossing form for two.
double interference_factor(const CoupledSystem& system, const FieldDrive& drive,
                           std::size_t start_segment = 0);

// Flags stored in lzs_map output.
inline constexpr int kForbidden = 0;
inline constexpr int kAllowed = 1;
inline constexpr int kDegenerate = 2;

// population_b over the grid. Classically forbidden and degenerate points
// hold 0 with their flag set; values are independent of the worker count.
GridValues lzs_map(const CoupledSystem& system, double omega, const FieldGrid& grid, int n_cycles,
                   unsigned workers = 1, std::size_t start_segment = 0, Mode mode = Mode::Exact);

}  // namespace rfdress::lzs
