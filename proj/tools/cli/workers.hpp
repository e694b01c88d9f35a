#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace cyint::app {

/// Worker count from CYINT_WORKERS; defaults to the hardware concurrency. Throws ConfigError when malformed.
std::size_t worker_count();

/// Runs task(0..n-1) on up to `workers` threads. Results keep index order and the lowest-index exception is
/// rethrown, so the outcome does not depend on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, std::size_t workers, const std::function<T(std::size_t)>& task) {
  std::vector<std::optional<T>> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::mutex m;
  std::size_t next = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(m);
        if (next == n) return;
        i = next++;
      }
      try {
        out[i].emplace(task(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t threads = std::min(std::max<std::size_t>(workers, 1), n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> result;
  result.reserve(n);
  for (auto& x : out) result.push_back(std::move(*x));
  return result;
}

/// Line-buffered diagnostics on a stream separate from the report.
class Progress {
 public:
  explicit Progress(std::ostream* os) : os_(os) {}
  void say(const std::string& line) {
    if (!os_) return;
    std::lock_guard<std::mutex> lock(m_);
    *os_ << "[cyint] " << line << std::endl;
  }

 private:
  std::ostream* os_;
  std::mutex m_;
};

}  // namespace cyint::app
