#include "randmin/core.hpp"

#include <algorithm>
#include <vector>

namespace randmin {

namespace {

void check_k(WordView v, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > v.size()) {
    throw InvalidParams("k = " + std::to_string(k) + " is not in [1, |v| = " + std::to_string(v.size()) + "]");
  }
}

}  // namespace

int count_distinct_kmers(WordView v, int k) {
  check_k(v, k);
  const auto uk = static_cast<std::size_t>(k);
  std::vector<WordView> kmers;
  kmers.reserve(v.size() - uk + 1);
  for (std::size_t i = 0; i + uk <= v.size(); ++i) kmers.push_back(v.subspan(i, uk));
  auto less = [](WordView a, WordView b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  auto equal = [](WordView a, WordView b) { return std::equal(a.begin(), a.end(), b.begin(), b.end()); };
  std::sort(kmers.begin(), kmers.end(), less);
  return static_cast<int>(std::unique(kmers.begin(), kmers.end(), equal) - kmers.begin());
}

ContextStats context_stats(WordView v, int k) {
  ContextStats s;
  s.distinct = count_distinct_kmers(v, k);
  const auto uk = static_cast<std::size_t>(k);
  const WordView suffix = v.last(uk);
  s.suffix_unique = true;
  for (std::size_t i = 0; i + uk < v.size(); ++i) {
    if (std::equal(suffix.begin(), suffix.end(), v.begin() + static_cast<std::ptrdiff_t>(i))) {
      s.suffix_unique = false;
      break;
    }
  }
  return s;
}

void check_context(WordView v, const Params& params) {
  params.validate();
  if (v.size() != static_cast<std::size_t>(params.context_length())) {
    throw InvalidParams("context must have length w+k = " + std::to_string(params.context_length()) +
                        ", got " + std::to_string(v.size()));
  }
  check_alphabet(v, params.sigma);
}

BigRational gamechanger_probability(WordView v, const Params& params) {
  check_context(v, params);
  const ContextStats s = context_stats(v, params.k);
  return make_rational(s.suffix_unique ? 2 : 1, s.distinct);
}

std::size_t min_kmer_position(WordView s, const KmerCodec& codec, const OrderKey& key) {
  const auto uk = static_cast<std::size_t>(codec.k());
  if (s.size() < uk) throw InvalidParams("string shorter than k");
  std::size_t best = 0;
  KmerCode best_code = codec.encode(s.first(uk));
  std::uint64_t best_key = key(best_code);
  for (std::size_t i = 1; i + uk <= s.size(); ++i) {
    const KmerCode c = codec.encode(s.subspan(i, uk));
    const std::uint64_t kc = key(c);
    if (kc < best_key || (kc == best_key && c < best_code)) {
      best = i;
      best_code = c;
      best_key = kc;
    }
  }
  return best;
}

bool is_gamechanger(WordView v, const OrderKey& key, const Params& params) {
  check_context(v, params);
  const KmerCodec codec(params.sigma, params.k);
  const std::size_t pos = min_kmer_position(v, codec, key);
  // Leftmost tie-breaking means a minimum found at the last position is the
  // only occurrence of that k-mer.
  return pos == 0 || pos == static_cast<std::size_t>(params.w);
}

}  // namespace randmin
