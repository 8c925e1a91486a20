#include "rfdress/besselx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rfdress/errors.hpp"
#include "rfdress/quadrature.hpp"

namespace rfdress::besselx {

namespace {

constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleBy = 1e-250;

double parity_sign(int k) { return (k & 1) ? -1.0 : 1.0; }

}  // namespace

BesselTable::BesselTable(double x, int max_order) : x_(x), values_(std::max(0, max_order) + 1, 0.0) {
  if (!std::isfinite(x)) throw DomainError("BesselTable: x must be finite");
  const double ax = std::fabs(x);
  const int top = max_order < 0 ? 0 : max_order;
  if (ax == 0.0) {
    values_[0] = 1.0;
    return;
  }

  // Start far enough above both the requested order and the turning point
  // k = x that the seeded J_start has decayed below double precision.
  const double reach = std::max(static_cast<double>(top), ax);
  int start = static_cast<int>(std::ceil(reach + 20.0 + std::sqrt(40.0 * reach)));
  start += start & 1;

  const double two_over_x = 2.0 / ax;
  double j_next = 0.0;  // J_{k+1}
  double j = 1.0;       // J_k, arbitrary seed at k = start
  double norm = 0.0;    // accumulates 2 sum J_2k (k >= 1) + J_0
  for (int k = start; k >= 1; --k) {
    const double j_prev = static_cast<double>(k) * two_over_x * j - j_next;
    j_next = j;
    j = j_prev;
    const int order = k - 1;
    if (order <= top) values_[order] = j;
    if (order > 0 && (order & 1) == 0) norm += 2.0 * j;
    if (std::fabs(j) > kRescaleAbove) {
      j *= kRescaleBy;
      j_next *= kRescaleBy;
      norm *= kRescaleBy;
      for (int i = order; i <= top; ++i) values_[i] *= kRescaleBy;
    }
  }
  norm += j;

  const bool negate_odd = x < 0.0;
  for (int k = 0; k <= top; ++k) {
    values_[k] /= norm;
    if (negate_odd && (k & 1)) values_[k] = -values_[k];
  }
}

double BesselTable::operator()(int k) const {
  const int ak = k < 0 ? -k : k;
  if (ak > max_order()) throw std::out_of_range("BesselTable: order beyond table");
  // + 0.0 turns the -0 of odd negative orders at x = 0 into +0.
  return (k < 0 ? parity_sign(ak) * values_[ak] : values_[ak]) + 0.0;
}

double bessel_j(int n, double x) {
  const int an = n < 0 ? -n : n;
  return BesselTable(x, an)(n);
}

int gen_bessel_terms(int n, double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("gen_bessel: x and y must be finite");
  const double ax = std::fabs(x);
  const double ay = std::fabs(y);
  const double from_y = ay + 3.0 * std::cbrt(ay) + 3.0;
  const double from_x = 0.5 * (std::abs(n) + ax + 3.0 * std::cbrt(ax) + 3.0);
  return static_cast<int>(std::ceil(std::max(from_y, from_x))) + 5;
}

namespace {

double gen_sum_with_tables(int n, int terms, const BesselTable& jx, const BesselTable& jy) {
  double sum = 0.0;
  for (int m = -terms; m <= terms; ++m) {
    const double a = jy(m);
    if (a == 0.0) continue;
    sum += jx(n - 2 * m) * a;
  }
  return sum;
}

}  // namespace

double gen_bessel_sum(const GenBesselArgs& args) {
  const int terms = gen_bessel_terms(args.n, args.x, args.y);
  const BesselTable jx(args.x, std::abs(args.n) + 2 * terms);
  const BesselTable jy(args.y, terms);
  return gen_sum_with_tables(args.n, terms, jx, jy);
}

std::vector<double> gen_bessel_orders(int n_min, int n_max, double x, double y) {
  if (n_max < n_min) return {};
  const int widest = std::max(std::abs(n_min), std::abs(n_max));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  if (y == 0.0) {
    const BesselTable jx(x, widest);
    for (int n = n_min; n <= n_max; ++n) out.push_back(jx(n));
    return out;
  }
  const int max_terms = gen_bessel_terms(widest, x, y);
  const BesselTable jx(x, widest + 2 * max_terms);
  const BesselTable jy(y, max_terms);
  for (int n = n_min; n <= n_max; ++n) {
    out.push_back(gen_sum_with_tables(n, gen_bessel_terms(n, x, y), jx, jy));
  }
  return out;
}

IntegralValue gen_bessel_integral_detail(const GenBesselArgs& args, double abs_tol) {
  const double n = static_cast<double>(args.n);
  const double x = args.x;
  const double y = args.y;
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("gen_bessel_integral: x and y must be finite");
  auto integrand = [=](double t) { return std::cos(n * t - x * std::sin(t) - y * std::sin(2.0 * t)); };
  // Roughly one panel per half-oscillation of the phase.
  const double max_rate = std::fabs(n) + std::fabs(x) + 2.0 * std::fabs(y);
  const auto panels = static_cast<std::size_t>(std::ceil(max_rate / 2.0)) + 1;
  // The result is the quadrature divided by pi.
  const auto r = quadrature::integrate(integrand, 0.0, std::numbers::pi, abs_tol * std::numbers::pi, panels);
  return {r.value / std::numbers::pi, r.error / std::numbers::pi};
}

double gen_bessel_integral(const GenBesselArgs& args) { return gen_bessel_integral_detail(args).value; }

}  // namespace rfdress::besselx
