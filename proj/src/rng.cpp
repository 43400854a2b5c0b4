#include "ramsey/rng.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ramsey {

void for_each_chunk(std::uint64_t samples, std::uint64_t seed, int threads,
                    const std::function<void(Rng&, std::uint64_t, std::uint64_t)>& body,
                    std::uint64_t chunk) {
  if (chunk == 0) chunk = 1;
  const std::uint64_t chunks = (samples + chunk - 1) / chunk;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
        Rng rng(seed, c);
        const std::uint64_t begin = c * chunk;
        body(rng, begin, std::min(samples, begin + chunk));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(chunks);
    }
  };

  const auto workers =
      static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)),
                                                 1, std::max<std::uint64_t>(chunks, 1)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ramsey
