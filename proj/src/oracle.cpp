#include "randmin/oracle.hpp"

#include "randmin/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace randmin {

namespace {

// Contexts are split into contiguous index ranges; each range is walked with
// an odometer increment.
constexpr std::uint64_t kChunks = 256;

bool advance(Word& v, int sigma) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < sigma) return true;
    v[i] = 0;
  }
  return false;
}

template <class Visit>
void for_each_context_range(std::uint64_t total, int sigma, int length, unsigned threads,
                            Visit&& visit) {
  const std::uint64_t chunks = std::min<std::uint64_t>(kChunks, total);
  parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t chunk, unsigned worker) {
    const std::uint64_t lo = total * chunk / chunks;
    const std::uint64_t hi = total * (chunk + 1) / chunks;
    if (lo == hi) return;
    Word v(static_cast<std::size_t>(length));
    context_from_index(lo, sigma, v);
    for (std::uint64_t i = lo; i < hi; ++i) {
      visit(static_cast<const Word&>(v), worker);
      advance(v, sigma);
    }
  });
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

void context_from_index(std::uint64_t index, int sigma, Word& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(sigma));
    index /= static_cast<std::uint64_t>(sigma);
  }
}

LeafTally naive_context_tally(const Params& params, const EnumOptions& opts) {
  params.validate();
  const std::uint64_t total = params.context_count(opts.cap);
  const unsigned workers = resolve_threads(opts.threads);
  std::vector<LeafTally> partial(workers, LeafTally(params.w + 1));
  for_each_context_range(total, params.sigma, params.context_length(), workers,
                         [&](const Word& v, unsigned worker) {
                           const ContextStats s = context_stats(v, params.k);
                           partial[worker].add(s.distinct, s.suffix_unique);
                         });
  LeafTally tally(params.w + 1);
  for (const auto& p : partial) tally.merge(p);
  return tally;
}

BigRational exact_density_naive(const Params& params, const EnumOptions& opts) {
  const LeafTally tally = naive_context_tally(params, opts);
  BigRational dr = tally.probability_sum();
  dr /= BigRational(BigInt(static_cast<unsigned long>(tally.total())));
  return dr;
}

std::uint64_t count_gamechangers(const OrderKey& key, const Params& params, const EnumOptions& opts) {
  params.validate();
  const std::uint64_t total = params.context_count(opts.cap);
  const unsigned workers = resolve_threads(opts.threads);
  const KmerCodec codec(params.sigma, params.k);
  std::vector<std::uint64_t> partial(workers, 0);
  for_each_context_range(total, params.sigma, params.context_length(), workers,
                         [&](const Word& v, unsigned worker) {
                           const std::size_t pos = min_kmer_position(v, codec, key);
                           if (pos == 0 || pos == static_cast<std::size_t>(params.w)) ++partial[worker];
                         });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

BigRational density_of_order(const OrderKey& key, const Params& params, const EnumOptions& opts) {
  const std::uint64_t hits = count_gamechangers(key, params, opts);
  const std::uint64_t total = params.context_count(opts.cap);
  return make_rational(BigInt(static_cast<unsigned long>(hits)), BigInt(static_cast<unsigned long>(total)));
}

BigRational average_over_all_orders(const Params& params, const EnumOptions& opts) {
  params.validate();
  const KmerCodec codec(params.sigma, params.k);
  const std::uint64_t n_kmers = codec.size();
  if (n_kmers > kMaxKmersForAllOrders) {
    throw CapExceeded("averaging over all orders needs sigma^k <= " + std::to_string(kMaxKmersForAllOrders) +
                      ", got " + std::to_string(n_kmers) + " k-mers");
  }
  const std::uint64_t total = params.context_count(opts.cap);
  const auto per_context = static_cast<std::size_t>(params.w + 1);
  const auto uk = static_cast<std::size_t>(params.k);

  // k-mer codes of every context, computed once and reused for every order.
  std::vector<KmerCode> codes(static_cast<std::size_t>(total) * per_context);
  Word v(static_cast<std::size_t>(params.context_length()));
  for (std::uint64_t i = 0; i < total; ++i) {
    context_from_index(i, params.sigma, v);
    for (std::size_t j = 0; j < per_context; ++j) {
      codes[static_cast<std::size_t>(i) * per_context + j] = codec.encode(WordView(v).subspan(j, uk));
    }
  }

  const unsigned workers = resolve_threads(opts.threads);
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(n_kmers), 0);
  // One task per rank of k-mer 0; each task walks the ranks of the remaining
  // k-mers through every permutation in lexicographic order.
  parallel_for(static_cast<std::size_t>(n_kmers), workers, [&](std::size_t first, unsigned) {
    std::vector<std::uint64_t> rank(static_cast<std::size_t>(n_kmers));
    rank[0] = first;
    std::uint64_t fill = 0;
    for (std::size_t i = 1; i < rank.size(); ++i) {
      if (fill == first) ++fill;
      rank[i] = fill++;
    }
    std::uint64_t hits = 0;
    do {
      for (std::uint64_t c = 0; c < total; ++c) {
        const KmerCode* ctx = &codes[static_cast<std::size_t>(c) * per_context];
        std::size_t best = 0;
        for (std::size_t j = 1; j < per_context; ++j) {
          if (rank[ctx[j]] < rank[ctx[best]]) best = j;
        }
        if (best == 0 || best + 1 == per_context) ++hits;
      }
    } while (std::next_permutation(rank.begin() + 1, rank.end()));
    partial[first] = hits;
  });

  const std::uint64_t hits = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  const BigInt denom = BigInt(static_cast<unsigned long>(factorial(n_kmers))) *
                       BigInt(static_cast<unsigned long>(total));
  return make_rational(BigInt(static_cast<unsigned long>(hits)), denom);
}

}  // namespace randmin
