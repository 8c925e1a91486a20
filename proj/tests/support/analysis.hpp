#pragma once

// Small curve-analysis helpers shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace rfdress::testing {

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

// Interior samples strictly above (below) both neighbours; plateaus count once.
inline std::vector<std::size_t> local_maxima(const std::vector<double>& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] > v[i - 1] && v[i] >= v[i + 1]) out.push_back(i);
  }
  return out;
}

inline std::vector<std::size_t> local_minima(const std::vector<double>& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] < v[i - 1] && v[i] <= v[i + 1]) out.push_back(i);
  }
  return out;
}

// Full width at half maximum of the peak at index `peak`, with linear
// interpolation of the half-level crossings. A side that never drops to half
// before the curve turns up again (or ends) is cut at that minimum.
inline double fwhm(const std::vector<double>& x, const std::vector<double>& v, std::size_t peak) {
  const double half = 0.5 * v[peak];
  auto edge = [&](int dir) {
    std::size_t i = peak;
    while (true) {
      const std::size_t j = dir > 0 ? i + 1 : i - 1;
      if ((dir > 0 && j >= v.size()) || (dir < 0 && i == 0)) return x[i];
      if (v[j] <= half) {
        const double f = (v[i] - half) / (v[i] - v[j]);
        return x[i] + f * (x[j] - x[i]);
      }
      if (v[j] > v[i]) return x[i];
      i = j;
    }
  };
  return std::fabs(edge(+1) - edge(-1));
}

// Positions where v changes sign between samples i and i+1, by linear
// interpolation in x.
inline std::vector<double> sign_changes(const std::vector<double>& x, const std::vector<double>& v) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if ((v[i] < 0.0 && v[i + 1] > 0.0) || (v[i] > 0.0 && v[i + 1] < 0.0)) {
      out.push_back(x[i] + v[i] / (v[i] - v[i + 1]) * (x[i + 1] - x[i]));
    }
  }
  return out;
}

// Golden-section search for a maximum of f on [a, b].
inline double golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

inline double nearest_distance(double x, const std::vector<double>& points) {
  double best = INFINITY;
  for (double p : points) best = std::min(best, std::fabs(x - p));
  return best;
}

}  // namespace rfdress::testing
