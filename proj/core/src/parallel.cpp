#include "grayform/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace grayform {

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GRAYFORM_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    } catch (const std::exception&) {
    }
  }
  return hw;
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body) {
  unsigned w = worker_count();
  if (w <= 1 || n < 2 * w) {
    if (n > 0) body(0, n, 0);
    return;
  }
  std::size_t chunk = (n + w - 1) / w;
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (unsigned k = 0; k < w; ++k) {
    std::size_t b = k * chunk;
    std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&body, b, e, k] { body(b, e, k); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace grayform
