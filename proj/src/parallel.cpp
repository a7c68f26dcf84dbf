#include "odisc/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace odisc {

int thread_budget() {
  if (const char* env = std::getenv("ORACLE_DISC_THREADS")) {
    try {
      const int parsed = std::stoi(env);
      if (parsed >= 1) return parsed;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

void run_chunks(std::size_t chunks, const std::function<void(std::size_t)>& fn,
                int threads) {
  if (chunks == 0) return;
  if (threads <= 0) threads = thread_budget();
  const std::size_t workers =
      std::min<std::size_t>(std::size_t(threads), chunks);

  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace odisc
