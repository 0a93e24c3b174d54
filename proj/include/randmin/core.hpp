#pragma once

#include "randmin/kmer.hpp"
#include "randmin/params.hpp"
#include "randmin/rational.hpp"

#include <cstdint>
#include <functional>

namespace randmin {

/// A total order on k-mers given as a sort key; equal keys fall back to
/// ascending KmerCode.
using OrderKey = std::function<std::uint64_t(KmerCode)>;

/// The identity order: k-mers compare lexicographically.
inline std::uint64_t identity_key(KmerCode c) { return c; }

/// Number of distinct k-substrings of v, by sorting views. Reference version.
int count_distinct_kmers(WordView v, int k);

struct ContextStats {
  int distinct = 0;            // t: distinct k-mers in the context
  bool suffix_unique = false;  // the k-suffix occurs nowhere else
};

/// Distinct k-mer count and suffix uniqueness of a context, computed naively.
ContextStats context_stats(WordView v, int k);

/// Probability that the (w+k)-string v is a gamechanger under a uniformly
/// random order: 2/t if its k-suffix is unique, else 1/t.
BigRational gamechanger_probability(WordView v, const Params& params);

/// 0-based start of the minimal k-mer of s under key (ties: smaller code,
/// then leftmost).
std::size_t min_kmer_position(WordView s, const KmerCodec& codec, const OrderKey& key);

/// True iff the minimal k-mer of the (w+k)-string v is its prefix, or is its
/// suffix occurring only once.
bool is_gamechanger(WordView v, const OrderKey& key, const Params& params);

/// Throws InvalidParams unless |v| == w+k and all symbols are in range.
void check_context(WordView v, const Params& params);

}  // namespace randmin
