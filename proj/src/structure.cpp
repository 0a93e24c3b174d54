#include "randmin/structure.hpp"

#include "randmin/core.hpp"

#include <algorithm>
#include <string>

namespace randmin {

namespace {

void check_half_quadrant(const Params& params) {
  params.validate();
  if (params.w > params.k) throw InvalidParams("phi needs w <= k, got " + to_string(params));
}

void check_length(WordView v, int expected, const char* what) {
  if (v.size() != static_cast<std::size_t>(expected)) {
    throw InvalidParams(std::string(what) + ": expected length " + std::to_string(expected) + ", got " +
                        std::to_string(v.size()));
  }
}

// Major run in 0-based half-open form [lo, hi).
struct Span {
  std::size_t lo;
  std::size_t hi;
  std::size_t p;
};

Span require_major_run(WordView v, const char* what) {
  const auto run = find_major_run(v);
  if (!run) throw InvalidParams(std::string(what) + ": string has no major run");
  return {static_cast<std::size_t>(run->start - 1), static_cast<std::size_t>(run->end),
          static_cast<std::size_t>(run->period)};
}

}  // namespace

int minimal_period(WordView s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && s[i] != s[b]) b = border[b - 1];
    if (s[i] == s[b]) ++b;
    border[i] = b;
  }
  return static_cast<int>(n - border[n - 1]);
}

std::vector<MajorRun> find_runs(WordView v) {
  const std::size_t n = v.size();
  std::vector<MajorRun> runs;
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    // Maximal blocks of i with v[i] == v[i+p] give maximal p-periodic substrings.
    std::size_t i = 0;
    while (i + p < n) {
      if (v[i] != v[i + p]) {
        ++i;
        continue;
      }
      const std::size_t lo = i;
      while (i + p < n && v[i] == v[i + p]) ++i;
      const std::size_t hi = i + p;  // exclusive
      if (hi - lo >= 2 * p && minimal_period(v.subspan(lo, hi - lo)) == static_cast<int>(p)) {
        runs.push_back({static_cast<int>(lo) + 1, static_cast<int>(hi), static_cast<int>(p)});
      }
    }
  }
  std::sort(runs.begin(), runs.end(), [](const MajorRun& a, const MajorRun& b) {
    return a.start != b.start ? a.start < b.start : a.period < b.period;
  });
  return runs;
}

std::optional<MajorRun> find_major_run(WordView v) {
  const auto n = static_cast<int>(v.size());
  for (const MajorRun& r : find_runs(v)) {
    if (2 * r.length() >= n + 2 * r.period) return r;
  }
  return std::nullopt;
}

bool has_repeated_kmer(WordView v, int k) {
  return count_distinct_kmers(v, k) < static_cast<int>(v.size()) - k + 1;
}

int distinct_kmers_via_run(WordView v, const Params& params) {
  check_half_quadrant(params);
  check_length(v, params.context_length(), "distinct_kmers_via_run");
  const auto run = find_major_run(v);
  if (!run || run->length() < run->period + params.k) {
    throw InvalidParams("distinct_kmers_via_run: no major run of length >= period + k in " + format_word(v));
  }
  return params.w - (run->length() - run->period - params.k);
}

Word phi(WordView v, const Params& params) {
  check_half_quadrant(params);
  check_length(v, params.context_length(), "phi");
  check_alphabet(v, params.sigma);
  if (!has_repeated_kmer(v, params.k)) throw InvalidParams("phi: " + format_word(v) + " has no repeated k-mer");
  const Span x = require_major_run(v, "phi");
  const Symbol a1 = v[x.hi - x.p];

  Word out(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(x.hi));
  out.push_back(a1);
  const std::size_t r_begin = out.size();
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(x.hi), v.end());
  if (x.p > 1 && x.hi < v.size() && v[x.hi] == v[x.hi - x.p + 1]) out[r_begin] = a1;
  return out;
}

Word phi_inverse(WordView v_next, const Params& params) {
  check_half_quadrant(params);
  check_length(v_next, params.context_length() + 1, "phi_inverse");
  check_alphabet(v_next, params.sigma);
  if (!has_repeated_kmer(v_next, params.k + 1)) {
    throw InvalidParams("phi_inverse: " + format_word(v_next) + " has no repeated (k+1)-mer");
  }
  const Span x = require_major_run(v_next, "phi_inverse");
  const Symbol a1 = v_next[x.hi - 1];
  const Symbol a2 = v_next[x.hi - x.p];

  Word out(v_next.begin(), v_next.begin() + static_cast<std::ptrdiff_t>(x.hi - 1));
  const std::size_t r_begin = out.size();
  out.insert(out.end(), v_next.begin() + static_cast<std::ptrdiff_t>(x.hi), v_next.end());
  if (x.p > 1 && x.hi < v_next.size() && v_next[x.hi] == a1) out[r_begin] = a2;
  return out;
}

}  // namespace randmin
