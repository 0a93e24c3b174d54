#pragma once

// Sampling estimates of the density of a random order, for parameters where
// neither enumeration nor the closed form applies.

#include "randmin/core.hpp"

#include <cstdint>

namespace randmin {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// A random order on k-mers: key(c) is a keyed 64-bit hash of c, with ties
/// falling back to c itself. Approximates a uniformly random permutation;
/// two codes collide with probability 2^-64.
class RandomOrder {
 public:
  explicit RandomOrder(std::uint64_t seed) : seed_(mix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t key(KmerCode c) const { return mix64(seed_ ^ mix64(c)); }
  OrderKey as_key() const {
    return [s = seed_](KmerCode c) { return mix64(s ^ mix64(c)); };
  }

 private:
  std::uint64_t seed_;
};

struct McEstimate {
  double mean = 0.0;
  /// Standard error across replicates; 0 when there is a single replicate.
  double std_error = 0.0;
  int replicates = 0;
  std::uint64_t total_windows = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

struct McOptions {
  std::uint64_t n = 1'000'000;  // string length per replicate
  int replicates = 16;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

/// Uniform random string over the alphabet, fully determined by
/// (seed, replicate).
Word random_string(int sigma, std::uint64_t n, std::uint64_t seed, std::uint64_t replicate);

/// Order used by one replicate; determined by (seed, replicate).
RandomOrder replicate_order(std::uint64_t seed, std::uint64_t replicate);

/// Fraction of marked positions in random strings of length n, each replicate
/// with its own string and order. The denominator is the number of k-mer
/// positions, n-k+1, so w = 1 gives exactly 1. Requires n >= 10 (w+k).
McEstimate mc_density(const Params& params, const McOptions& opts);

/// Fraction of (w+k)-substrings of the random strings that are gamechangers.
McEstimate mc_gamechanger_density(const Params& params, const McOptions& opts);

/// Mean over all contexts of random strings of the exact charged probability
/// (1 + [suffix unique]) / (distinct k-mers), which averages over orders
/// exactly. Unbiased for the same quantity as mc_density, with no order
/// noise, and every term is at least sigma^-k.
McEstimate mc_context_density(const Params& params, const McOptions& opts);

/// sigma^-k + (1 + k/sigma^k) (1 - (sigma-1)/sigma^(k+1))^(w+k-1): an upper
/// bound on the density of a random order.
double bigw_upper_bound(const Params& params);

/// ceil(sigma/(sigma-1) * sigma^k * (ln sigma^k + 3)): a window size at which
/// the bound above is within a factor 1 + O(e^-3) of sigma^-k.
int bigw_window(int sigma, int k);

struct SubsetReport {
  int trials = 0;
  int violations = 0;
  /// Index of the first violating trial, or -1.
  int first_violation = -1;
  bool ok() const { return violations == 0; }
};

/// For each trial, a random string and order are shared between window sizes
/// w and w+1; checks that the positions marked at w+1 are a subset of those
/// marked at w.
SubsetReport check_markup_monotone(const Params& params, std::uint64_t n, int trials, std::uint64_t seed,
                                   unsigned threads = 0);

}  // namespace randmin
