#pragma once

#include "randmin/rational.hpp"

#include <cstdint>
#include <vector>

namespace randmin {

/// Counts of contexts by their number t of distinct k-mers, split by whether
/// the k-suffix is unique. Summing sigma^(w+k) rationals one by one is
/// replaced by one pass over at most w+1 buckets.
class LeafTally {
 public:
  explicit LeafTally(int max_distinct) : unique_(static_cast<std::size_t>(max_distinct) + 1, 0),
                                         repeated_(static_cast<std::size_t>(max_distinct) + 1, 0) {}

  void add(int distinct, bool suffix_unique) {
    auto& bucket = suffix_unique ? unique_ : repeated_;
    ++bucket[static_cast<std::size_t>(distinct)];
  }

  void merge(const LeafTally& other) {
    for (std::size_t t = 0; t < unique_.size(); ++t) {
      unique_[t] += other.unique_[t];
      repeated_[t] += other.repeated_[t];
    }
  }

  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (std::size_t t = 0; t < unique_.size(); ++t) n += unique_[t] + repeated_[t];
    return n;
  }

  /// Sum over all tallied contexts of 2/t (unique suffix) or 1/t.
  BigRational probability_sum() const {
    BigRational sum = 0;
    for (std::size_t t = 1; t < unique_.size(); ++t) {
      const BigInt weight = BigInt(2) * BigInt(static_cast<unsigned long>(unique_[t])) +
                            BigInt(static_cast<unsigned long>(repeated_[t]));
      if (weight != 0) sum += make_rational(weight, BigInt(static_cast<unsigned long>(t)));
    }
    return sum;
  }

  std::uint64_t unique_count(int t) const { return unique_[static_cast<std::size_t>(t)]; }
  std::uint64_t repeated_count(int t) const { return repeated_[static_cast<std::size_t>(t)]; }

  friend bool operator==(const LeafTally&, const LeafTally&) = default;

 private:
  std::vector<std::uint64_t> unique_;
  std::vector<std::uint64_t> repeated_;
};

}  // namespace randmin
