#include "rfdress/grid.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "rfdress/errors.hpp"

namespace rfdress {

double Axis::at(std::size_t i) const {
  if (steps <= 1) return min;
  if (i + 1 == steps) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

double Axis::spacing() const {
  if (steps <= 1) return 0.0;
  return (max - min) / static_cast<double>(steps - 1);
}

void Axis::validate(const char* name) const {
  if (steps < 1) throw DomainError(std::string(name) + ": steps must be positive");
  if (steps > 1 && !(max > min)) throw DomainError(std::string(name) + ": max must exceed min");
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(workers, count);
    pool.reserve(n);
    for (std::size_t w = 0; w < n; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rfdress
