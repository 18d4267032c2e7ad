#include "bandsinc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bandsinc {

unsigned worker_count() noexcept {
  unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BANDSINC_THREADS")) {
    char* end = nullptr;
    const long requested = std::strtol(env, &end, 10);
    if (end != env && requested > 0) return static_cast<unsigned>(std::min<long>(requested, 1024));
  }
  return hardware;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  constexpr std::size_t kMinChunk = 64;
  const std::size_t workers = std::min<std::size_t>(worker_count(), (n + kMinChunk - 1) / kMinChunk);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    threads.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& thread : threads) thread.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bandsinc
