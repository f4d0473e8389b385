#pragma once

#include <atomic>
#include <cstddef>
#include <deque>
#include <mutex>
#include <stdexcept>

#include "natural.hpp"

namespace fibprod {

// Append-only cache of the Fibonacci numbers F_k for k >= 2 (F_2 = 1,
// F_3 = 2, F_{k+2} = F_{k+1} + F_k). Indexing from 2 keeps the stored
// values strictly increasing and makes locate() unambiguous at m = 1.
//
// Published entries are immutable and live in a deque, so references stay
// valid while the table grows. Readers go through an atomic entry count and
// never take the lock; extension serializes on a mutex and republishes the
// count with release ordering. Concurrent use is as-if-serial: readers see
// a consistent prefix, extenders append in order.
class fib_table {
 public:
  fib_table() : entries_{natural(1), natural(2)}, ready_(2) {}

  fib_table(const fib_table&) = delete;
  fib_table& operator=(const fib_table&) = delete;

  // F_k for k >= 2, extending the table as needed.
  const natural& at(index_t k) {
    if (k < 2) throw std::invalid_argument("fib_table::at: index must be >= 2");
    const auto idx = static_cast<std::size_t>(k - 2);
    if (idx >= published()) grow_to(idx + 1);
    return entries_[idx];
  }

  // The unique n >= 2 with F_n <= m < F_{n+1}. Rejects m = 0: position 0
  // precedes every interval.
  index_t locate(const natural& m) {
    if (m <= 0) throw std::invalid_argument("fib_table::locate: m must be >= 1");
    grow_past(m);
    const std::size_t count = published();
    // Invariant: entries_[lo] <= m < entries_[hi].
    std::size_t lo = 0;
    std::size_t hi = count - 1;
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      (entries_[mid] <= m ? lo : hi) = mid;
    }
    return static_cast<index_t>(lo) + 2;
  }

  // Process-wide table; the single source of truth for every module.
  static fib_table& shared() {
    static fib_table table;
    return table;
  }

 private:
  std::size_t published() const { return ready_.load(std::memory_order_acquire); }

  void grow_to(std::size_t count) {
    std::lock_guard<std::mutex> lock(grow_mutex_);
    while (entries_.size() < count) append_next();
    ready_.store(entries_.size(), std::memory_order_release);
  }

  // Ensure the last published entry exceeds m.
  void grow_past(const natural& m) {
    if (entries_[published() - 1] > m) return;
    std::lock_guard<std::mutex> lock(grow_mutex_);
    while (entries_.back() <= m) append_next();
    ready_.store(entries_.size(), std::memory_order_release);
  }

  void append_next() {
    const std::size_t size = entries_.size();
    entries_.push_back(entries_[size - 1] + entries_[size - 2]);
  }

  std::deque<natural> entries_;  // entries_[i] = F_{i+2}
  std::atomic<std::size_t> ready_;
  std::mutex grow_mutex_;
};

// F_k under the usual indexing F_0 = 0, F_1 = 1.
inline natural fib(index_t k) {
  if (k < 0) throw std::invalid_argument("fib: negative index");
  if (k == 0) return natural(0);
  if (k == 1) return natural(1);
  return fib_table::shared().at(k);
}

inline index_t locate(const natural& m) { return fib_table::shared().locate(m); }

// F_2 + F_3 + ... + F_n. Closed form: F_{n+2} - 2.
inline natural prefix_sum(index_t n) {
  if (n < 2) throw std::invalid_argument("prefix_sum: n must be >= 2");
  return fib(n + 2) - 2;
}

}  // namespace fibprod
