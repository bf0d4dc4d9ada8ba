#ifndef POLYZERO_PARALLEL_HPP
#define POLYZERO_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace polyzero {

// Runs fn(i) for i in [0, count) on up to `threads` workers.  Each index is
// processed exactly once and results must be written to disjoint slots, so
// the outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t count, int threads, F&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace polyzero

#endif
