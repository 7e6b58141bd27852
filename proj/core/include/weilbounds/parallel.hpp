#ifndef WEILBOUNDS_PARALLEL_HPP
#define WEILBOUNDS_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace weilbounds {

// Worker count: WEILBOUNDS_THREADS when set, else the hardware count.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("WEILBOUNDS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Compensated (Kahan) accumulator.
struct KahanSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// Map fixed-size chunks of [0, n) through fn and combine the results in
// chunk order, so the outcome does not depend on the worker count.
template <typename T, typename Fn>
std::vector<T> chunked_map(size_t n, size_t chunk_size, unsigned threads, Fn&& fn) {
  size_t chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<T> results(chunks);
  if (threads <= 1 || chunks <= 1) {
    for (size_t c = 0; c < chunks; ++c)
      results[c] = fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
    return results;
  }
  std::vector<std::future<void>> workers;
  std::atomic<size_t> next{0};
  auto run = [&]() {
    for (;;) {
      size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      results[c] = fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
    }
  };
  for (unsigned t = 0; t < threads; ++t)
    workers.push_back(std::async(std::launch::async, run));
  for (auto& w : workers) w.get();
  return results;
}

}  // namespace weilbounds

#endif
