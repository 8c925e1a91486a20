#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "rfdress/errors.hpp"

namespace rfdress::quadrature {

struct Result {
  double value = 0.0;
  double error = 0.0;  // sum of per-panel |K - G| estimates
  std::size_t panels = 0;
};

// Globally adaptive Gauss-Kronrod (21 points per panel) with an absolute
// error target. The panel with the largest error estimate is bisected until
// the summed estimate drops below abs_tol. `initial_panels` lets callers
// presplit strongly oscillating integrands.
//
// Throws NumericError if max_panels is reached first.
template <class F>
Result integrate(F&& f, double a, double b, double abs_tol, std::size_t initial_panels = 1,
                 std::size_t max_panels = 1u << 14) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;
  struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
  };
  auto eval = [&f](double lo, double hi) {
    double err = 0.0;
    const double v = Rule::integrate(f, lo, hi, 0, 0.0, &err);
    return Panel{lo, hi, v, err};
  };

  std::priority_queue<Panel> queue;
  initial_panels = std::max<std::size_t>(1, initial_panels);
  for (std::size_t i = 0; i < initial_panels; ++i) {
    const double lo = a + (b - a) * static_cast<double>(i) / static_cast<double>(initial_panels);
    const double hi = (i + 1 == initial_panels)
                          ? b
                          : a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(initial_panels);
    queue.push(eval(lo, hi));
  }

  auto total_error = [&queue] {
    // priority_queue has no iteration; copy is cheap at these sizes.
    auto copy = queue;
    double e = 0.0;
    while (!copy.empty()) {
      e += copy.top().error;
      copy.pop();
    }
    return e;
  };

  double error = total_error();
  while (error > abs_tol) {
    if (queue.size() >= max_panels) {
      throw NumericError("quadrature: tolerance " + std::to_string(abs_tol) +
                         " not reached, achieved " + std::to_string(error));
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = eval(worst.a, mid);
    Panel right = eval(mid, worst.b);
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    // Guard against drift in the running sum.
    if (error <= abs_tol) error = total_error();
  }

  // Sum in left-to-right order so the result does not depend on heap layout.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  Result out;
  out.panels = panels.size();
  for (const auto& p : panels) {
    out.value += p.value;
    out.error += p.error;
  }
  return out;
}

}  // namespace rfdress::quadrature
