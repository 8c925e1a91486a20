#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rfdress {

// Inclusive linear axis with `steps` sample points.
struct Axis {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 1;

  double at(std::size_t i) const;
  double spacing() const;
  void validate(const char* name) const;
};

// Static-field by RF-amplitude sampling plane. Defaults enclose the
// features of the resonance maps: [0, 0.8] V/cm on both axes, 400 x 400.
struct FieldGrid {
  Axis f_static{0.0, 0.8, 400};
  Axis f_rf{0.0, 0.8, 400};

  std::size_t size() const { return f_static.steps * f_rf.steps; }
};

// Row-major over f_rf (outer) and f_static (inner).
struct GridValues {
  FieldGrid grid;
  std::vector<double> values;
  // Per-point status; meaning is defined by the producer (0 = ordinary).
  std::vector<int> flags;

  double at(std::size_t i_rf, std::size_t i_s) const {
    return values[i_rf * grid.f_static.steps + i_s];
  }
};

// Runs fn(i) for i in [0, count) on up to `workers` threads. Each index is
// visited exactly once; callers write results by index, so output does not
// depend on the worker count.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace rfdress
