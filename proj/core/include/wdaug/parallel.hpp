#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wdaug {

// Applies fn(i) for i in [0, n) on up to `limit` worker threads and returns
// the results in index order. The first exception is rethrown after all
// workers join.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t n, std::size_t limit, Fn&& fn) {
  std::vector<Result> results(n);
  if (n == 0) return results;
  if (limit <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }
  const std::size_t workers = std::min(limit, n);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          results[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

// Blocking token bucket shared by the remote clients. acquire() waits until
// a token is available and consumes it; rate 0 disables limiting.
class TokenBucket {
 public:
  TokenBucket(double tokens_per_second, double burst)
      : rate_(tokens_per_second),
        capacity_(burst > 0 ? burst : 1.0),
        tokens_(capacity_),
        last_(Clock::now()) {}

  void acquire() {
    if (rate_ <= 0) return;
    std::unique_lock<std::mutex> lock(mutex_);
    for (;;) {
      refill();
      if (tokens_ >= 1.0) {
        tokens_ -= 1.0;
        return;
      }
      const double missing = 1.0 - tokens_;
      const auto wait = std::chrono::duration<double>(missing / rate_);
      cv_.wait_for(lock, wait);
    }
  }

 private:
  using Clock = std::chrono::steady_clock;

  void refill() {
    const auto now = Clock::now();
    const double elapsed = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    tokens_ = std::min(capacity_, tokens_ + elapsed * rate_);
  }

  double rate_;
  double capacity_;
  double tokens_;
  Clock::time_point last_;
  std::mutex mutex_;
  std::condition_variable cv_;
};

}  // namespace wdaug
