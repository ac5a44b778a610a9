#include "entanglia/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace entanglia {

int worker_count() {
  if (const char* env = std::getenv("ENTANGLIA_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(long n, const std::function<void(long)>& body, int max_workers) {
  int w = worker_count();
  if (max_workers > 0 && max_workers < w) w = max_workers;
  if (n <= 0) return;
  if (w <= 1 || n == 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  if (w > n) w = static_cast<int>(n);
  std::atomic<long> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto run = [&] {
    for (;;) {
      long i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!err) err = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(w - 1);
  for (int t = 0; t + 1 < w; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace entanglia
