#pragma once

#include "randmin/core.hpp"

#include <cstdint>
#include <vector>

namespace randmin {

/// Streaming minimum over the last `width` k-mers (monotonic deque in a ring
/// buffer). Ties on key go to the smaller code, then to the leftmost position.
class SlidingMinimizer {
 public:
  explicit SlidingMinimizer(std::size_t width);

  /// Feeds the k-mer starting at `pos` (positions must be consecutive).
  void push(std::uint64_t key, KmerCode code, std::uint64_t pos);

  /// True once `width` k-mers have been pushed.
  bool full() const { return pushed_ >= width_; }

  /// Start position of the minimum of the current window. Requires full().
  std::uint64_t argmin() const { return ring_[head_].pos; }

  void reset();

 private:
  struct Entry {
    std::uint64_t key;
    KmerCode code;
    std::uint64_t pos;
  };

  static bool before(const Entry& a, const Entry& b) {
    return a.key < b.key || (a.key == b.key && a.code < b.code);
  }

  std::size_t width_;
  std::vector<Entry> ring_;
  std::size_t head_ = 0;
  std::size_t size_ = 0;
  std::uint64_t pushed_ = 0;
};

/// Marked positions (0-based, ascending, deduplicated) of the minimizer
/// markup of s: one chosen k-mer start per window of w+k-1 characters.
std::vector<std::size_t> markup(WordView s, const OrderKey& key, const Params& params);

}  // namespace randmin
