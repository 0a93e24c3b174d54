#include "randmin/montecarlo.hpp"

#include "randmin/markup.hpp"
#include "randmin/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace randmin {

namespace {

constexpr std::uint64_t kStringStream = 0x243f6a8885a308d3ULL;
constexpr std::uint64_t kOrderStream = 0x13198a2e03707344ULL;

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t replicate, std::uint64_t stream) {
  return mix64(mix64(seed ^ stream) + replicate);
}

void check_mc(const Params& params, const McOptions& opts) {
  params.validate();
  (void)KmerCodec(params.sigma, params.k);
  const auto minimum = 10 * static_cast<std::uint64_t>(params.context_length());
  if (opts.n < minimum) {
    throw InvalidParams("Monte Carlo needs n >= 10 (w+k) = " + std::to_string(minimum) + ", got " +
                        std::to_string(opts.n));
  }
  if (opts.replicates < 1) throw InvalidParams("Monte Carlo needs at least one replicate");
}

// Per-replicate values are aggregated in replicate order so the result does
// not depend on scheduling.
McEstimate summarize(const std::vector<double>& values, std::uint64_t windows_per_rep, std::uint64_t seed) {
  McEstimate e;
  e.replicates = static_cast<int>(values.size());
  e.total_windows = windows_per_rep * values.size();
  e.seed = seed;
  double sum = 0.0;
  for (double v : values) sum += v;
  e.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - e.mean) * (v - e.mean);
    const double var = ss / static_cast<double>(values.size() - 1);
    e.std_error = std::sqrt(var / static_cast<double>(values.size()));
  }
  return e;
}

// Streams the k-mers of s through a sliding minimum of `width` k-mers and
// calls visit(first_kmer_index, argmin) for every full window.
template <class Visit>
void scan_minima(WordView s, const KmerCodec& codec, const RandomOrder& order, std::size_t width, Visit&& visit) {
  const auto uk = static_cast<std::size_t>(codec.k());
  SlidingMinimizer mins(width);
  KmerCode code = codec.encode(s.first(uk));
  for (std::size_t i = 0; i + uk <= s.size(); ++i) {
    if (i > 0) code = codec.roll(code, s[i + uk - 1]);
    mins.push(order.key(code), code, i);
    if (mins.full()) visit(i + 1 - width, static_cast<std::size_t>(mins.argmin()));
  }
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Word random_string(int sigma, std::uint64_t n, std::uint64_t seed, std::uint64_t replicate) {
  if (sigma < 2 || sigma > kMaxSigma) throw InvalidParams("random_string: bad sigma");
  std::mt19937_64 rng(stream_seed(seed, replicate, kStringStream));
  Word s(static_cast<std::size_t>(n));
  const auto us = static_cast<std::uint64_t>(sigma);
  // Two 32-bit multiply-shift draws per 64-bit output; bias is below sigma/2^32.
  std::size_t i = 0;
  while (i < s.size()) {
    const std::uint64_t r = rng();
    s[i++] = static_cast<Symbol>(((r & 0xffffffffULL) * us) >> 32);
    if (i < s.size()) s[i++] = static_cast<Symbol>(((r >> 32) * us) >> 32);
  }
  return s;
}

RandomOrder replicate_order(std::uint64_t seed, std::uint64_t replicate) {
  return RandomOrder(stream_seed(seed, replicate, kOrderStream));
}

McEstimate mc_density(const Params& params, const McOptions& opts) {
  check_mc(params, opts);
  const KmerCodec codec(params.sigma, params.k);
  const std::uint64_t kmer_positions = opts.n - static_cast<std::uint64_t>(params.k) + 1;
  std::vector<double> values(static_cast<std::size_t>(opts.replicates));
  parallel_for(values.size(), opts.threads, [&](std::size_t rep, unsigned) {
    const Word s = random_string(params.sigma, opts.n, opts.seed, rep);
    const RandomOrder order = replicate_order(opts.seed, rep);
    std::uint64_t marked = 0;
    std::size_t last = static_cast<std::size_t>(-1);
    scan_minima(s, codec, order, static_cast<std::size_t>(params.w), [&](std::size_t, std::size_t chosen) {
      if (chosen != last) {
        ++marked;
        last = chosen;
      }
    });
    values[rep] = static_cast<double>(marked) / static_cast<double>(kmer_positions);
  });
  return summarize(values, opts.n - static_cast<std::uint64_t>(params.window_length()) + 1, opts.seed);
}

McEstimate mc_gamechanger_density(const Params& params, const McOptions& opts) {
  check_mc(params, opts);
  const KmerCodec codec(params.sigma, params.k);
  const std::uint64_t contexts = opts.n - static_cast<std::uint64_t>(params.context_length()) + 1;
  std::vector<double> values(static_cast<std::size_t>(opts.replicates));
  parallel_for(values.size(), opts.threads, [&](std::size_t rep, unsigned) {
    const Word s = random_string(params.sigma, opts.n, opts.seed, rep);
    const RandomOrder order = replicate_order(opts.seed, rep);
    const auto w = static_cast<std::size_t>(params.w);
    std::uint64_t hits = 0;
    // A minimum at the last k-mer is, by leftmost tie-breaking, its only occurrence.
    scan_minima(s, codec, order, w + 1, [&](std::size_t first, std::size_t chosen) {
      if (chosen == first || chosen == first + w) ++hits;
    });
    values[rep] = static_cast<double>(hits) / static_cast<double>(contexts);
  });
  return summarize(values, contexts, opts.seed);
}

McEstimate mc_context_density(const Params& params, const McOptions& opts) {
  check_mc(params, opts);
  const KmerCodec codec(params.sigma, params.k);
  const auto space = checked_pow(static_cast<std::uint64_t>(params.sigma), static_cast<std::uint64_t>(params.k));
  const bool dense = space && *space <= (std::uint64_t{1} << 24);
  const std::uint64_t contexts = opts.n - static_cast<std::uint64_t>(params.context_length()) + 1;
  std::vector<double> values(static_cast<std::size_t>(opts.replicates));
  parallel_for(values.size(), opts.threads, [&](std::size_t rep, unsigned) {
    const Word s = random_string(params.sigma, opts.n, opts.seed, rep);
    const auto uk = static_cast<std::size_t>(params.k);
    const std::size_t t = static_cast<std::size_t>(params.w) + 1;  // k-mers per context
    std::vector<KmerCode> codes(s.size() - uk + 1);
    KmerCode code = codec.encode(WordView(s).first(uk));
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (i > 0) code = codec.roll(code, s[i + uk - 1]);
      codes[i] = code;
    }
    // Multiplicities of the k-mers in the current context.
    std::vector<std::uint32_t> dense_count(dense ? static_cast<std::size_t>(*space) : 0);
    std::unordered_map<KmerCode, std::uint32_t> sparse_count;
    auto count = [&](KmerCode c) -> std::uint32_t& { return dense ? dense_count[c] : sparse_count[c]; };
    std::uint64_t distinct = 0;
    auto add = [&](KmerCode c) { distinct += count(c)++ == 0 ? 1 : 0; };
    auto remove = [&](KmerCode c) {
      std::uint32_t& m = count(c);
      distinct -= --m == 0 ? 1 : 0;
      if (!dense && m == 0) sparse_count.erase(c);
    };
    double sum = 0.0;
    for (std::size_t i = 0; i < t; ++i) add(codes[i]);
    for (std::size_t first = 0;; ++first) {
      const double charged = count(codes[first + t - 1]) == 1 ? 2.0 : 1.0;
      sum += charged / static_cast<double>(distinct);
      if (first + t >= codes.size()) break;
      remove(codes[first]);
      add(codes[first + t]);
    }
    values[rep] = sum / static_cast<double>(contexts);
  });
  return summarize(values, contexts, opts.seed);
}

double bigw_upper_bound(const Params& params) {
  params.validate();
  const double sigma = params.sigma;
  const double sk = std::pow(sigma, params.k);
  const double q = (sigma - 1.0) / (sk * sigma);
  return 1.0 / sk + (1.0 + params.k / sk) * std::exp(static_cast<double>(params.w + params.k - 1) * std::log1p(-q));
}

int bigw_window(int sigma, int k) {
  (void)Params::make(sigma, k, 1);
  const double sk = std::pow(static_cast<double>(sigma), k);
  const double w = sigma / (sigma - 1.0) * sk * (std::log(sk) + 3.0);
  if (w > 1e9) throw CapExceeded("bigw_window: window size does not fit in an int");
  return static_cast<int>(std::ceil(w));
}

SubsetReport check_markup_monotone(const Params& params, std::uint64_t n, int trials, std::uint64_t seed,
                                   unsigned threads) {
  params.validate();
  if (n < static_cast<std::uint64_t>(params.window_length() + 1)) {
    throw InvalidParams("check_markup_monotone: string shorter than a window of w+1 k-mers");
  }
  if (trials < 0) throw InvalidParams("check_markup_monotone: negative trial count");
  Params wider = params;
  wider.w += 1;
  std::vector<char> bad(static_cast<std::size_t>(trials), 0);
  parallel_for(bad.size(), threads, [&](std::size_t t, unsigned) {
    const Word s = random_string(params.sigma, n, seed, t);
    const OrderKey key = replicate_order(seed, t).as_key();
    const auto narrow_marks = markup(s, key, params);
    const auto wide_marks = markup(s, key, wider);
    bad[t] = std::includes(narrow_marks.begin(), narrow_marks.end(), wide_marks.begin(), wide_marks.end()) ? 0 : 1;
  });
  SubsetReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < bad.size(); ++t) {
    if (!bad[t]) continue;
    if (report.first_violation < 0) report.first_violation = static_cast<int>(t);
    ++report.violations;
  }
  return report;
}

}  // namespace randmin
