#pragma once

// Brute-force ground truth. Nothing here shares code paths with the fast
// enumerators or the closed form beyond the naive predicates in core.

#include "randmin/core.hpp"
#include "randmin/tally.hpp"

#include <cstdint>

namespace randmin {

struct EnumOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 0;
};

/// Tally of all sigma^(w+k) contexts by distinct k-mer count and suffix
/// uniqueness, each context counted from scratch.
LeafTally naive_context_tally(const Params& params, const EnumOptions& opts = {});

/// Expected density of a random order as the average gamechanger
/// probability over every context.
BigRational exact_density_naive(const Params& params, const EnumOptions& opts = {});

/// Number of contexts that are gamechangers under one fixed order.
std::uint64_t count_gamechangers(const OrderKey& key, const Params& params,
                                 const EnumOptions& opts = {});

/// Exact density of one fixed order: fraction of gamechanger contexts.
BigRational density_of_order(const OrderKey& key, const Params& params,
                             const EnumOptions& opts = {});

inline constexpr std::uint64_t kMaxKmersForAllOrders = 8;

/// Mean density over all (sigma^k)! orders. Requires sigma^k <= 8.
BigRational average_over_all_orders(const Params& params, const EnumOptions& opts = {});

/// Writes the index-th context of Sigma^n (odometer order, leftmost digit most
/// significant) into out.
void context_from_index(std::uint64_t index, int sigma, Word& out);

}  // namespace randmin
