#pragma once

#include "randmin/params.hpp"

#include <cstdint>

namespace randmin {

/// Base-sigma integer code of a k-mer; the leftmost character is the most
/// significant digit, so code order equals lexicographic order.
using KmerCode = std::uint64_t;

/// Encodes and decodes k-mers for a fixed (sigma, k). Construction fails if
/// sigma^k does not fit in 64 bits.
class KmerCodec {
 public:
  KmerCodec(int sigma, int k);

  int sigma() const { return sigma_; }
  int k() const { return k_; }
  /// sigma^k, the number of distinct codes.
  std::uint64_t size() const { return size_; }

  KmerCode encode(WordView kmer) const;
  Word decode(KmerCode code) const;

  /// Code of the k-mer obtained by dropping the first character of `code`
  /// and appending `next`.
  KmerCode roll(KmerCode code, Symbol next) const {
    return (code % high_) * static_cast<std::uint64_t>(sigma_) + next;
  }

 private:
  int sigma_;
  int k_;
  std::uint64_t size_;
  std::uint64_t high_;  // sigma^(k-1)
};

}  // namespace randmin
