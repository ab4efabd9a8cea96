#pragma once

// Static-partition parallel loops. The worker count comes from
// GRAYFORM_THREADS when set, otherwise from the hardware.

#include <cstddef>
#include <functional>
#include <vector>

namespace grayform {

/// Number of workers, at least 1.
unsigned worker_count();

/// Calls body(begin, end, worker) on contiguous chunks of [0, n).
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body);

/// Per-worker accumulators merged in worker order, so results do not depend
/// on scheduling.
template <class Acc, class Body, class Merge>
Acc parallel_reduce(std::size_t n, Acc init, Body body, Merge merge) {
  std::vector<Acc> parts(worker_count(), init);
  parallel_chunks(n, [&](std::size_t b, std::size_t e, unsigned w) {
    for (std::size_t i = b; i < e; ++i) body(parts[w], i);
  });
  Acc out = init;
  for (const Acc& p : parts) out = merge(out, p);
  return out;
}

}  // namespace grayform
