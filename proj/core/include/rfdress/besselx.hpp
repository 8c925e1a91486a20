#pragma once

#include <vector>

// Integer-order Bessel functions J_n(x) and the two-argument generalized
// Bessel function
//
//   J_n(x, y) = sum_m J_{n-2m}(x) J_m(y)
//             = (1/pi) int_0^pi cos(n t - x sin t - y sin 2t) dt,
//
// the Fourier coefficients of exp(i x sin t + i y sin 2t). Both forms are
// implemented independently so each can validate the other.
namespace rfdress::besselx {

struct GenBesselArgs {
  int n = 0;
  double x = 0.0;
  double y = 0.0;
};

// J_k(x) for |k| <= max_order, from one downward (Miller) recurrence sweep
// normalized with J_0 + 2 sum_k J_2k = 1.
class BesselTable {
 public:
  BesselTable(double x, int max_order);

  double x() const { return x_; }
  int max_order() const { return static_cast<int>(values_.size()) - 1; }
  // Any |k| <= max_order; negative orders use J_{-k} = (-1)^k J_k.
  double operator()(int k) const;

 private:
  double x_;
  std::vector<double> values_;  // k = 0..max_order
};

double bessel_j(int n, double x);

// Truncation half-width M for the sum over m, |m| <= M: the larger of the
// two negligibility bounds
//   y + 3 y^(1/3) + 3   and   (|n| + x + 3 x^(1/3) + 3) / 2
// plus a five-term margin.
int gen_bessel_terms(int n, double x, double y);

double gen_bessel_sum(const GenBesselArgs& args);

// J_n(x, y) for every n in [n_min, n_max], sharing one pair of tables.
std::vector<double> gen_bessel_orders(int n_min, int n_max, double x, double y);

struct IntegralValue {
  double value = 0.0;
  double error = 0.0;
};

// Quadrature route. Absolute tolerance 1e-12 by default; throws NumericError
// with the achieved estimate if it cannot be met.
IntegralValue gen_bessel_integral_detail(const GenBesselArgs& args, double abs_tol = 1e-12);
double gen_bessel_integral(const GenBesselArgs& args);

}  // namespace rfdress::besselx
