#pragma once

// Independent reference implementations for tests. Everything here works on
// plain std::string over '0'.. and recomputes from definitions; nothing calls
// into the library except for the rational type.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace brute {

inline std::string word(const std::vector<std::uint8_t>& v) {
  std::string s;
  for (auto c : v) s.push_back(static_cast<char>('0' + c));
  return s;
}

inline std::vector<std::uint8_t> symbols(const std::string& s) {
  std::vector<std::uint8_t> v;
  for (char c : s) v.push_back(static_cast<std::uint8_t>(c - '0'));
  return v;
}

/// All strings of length n over {0..sigma-1}.
inline std::vector<std::string> all_strings(int sigma, int n) {
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (int c = 0; c < sigma; ++c) next.push_back(s + static_cast<char>('0' + c));
    }
    out.swap(next);
  }
  return out;
}

inline std::set<std::string> kmers(const std::string& s, int k) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= s.size(); ++i) out.insert(s.substr(i, static_cast<std::size_t>(k)));
  return out;
}

inline bool has_repeat(const std::string& s, int k) {
  return kmers(s, k).size() < s.size() - static_cast<std::size_t>(k) + 1;
}

inline bool suffix_unique(const std::string& s, int k) {
  const std::string suf = s.substr(s.size() - static_cast<std::size_t>(k));
  return s.find(suf) == s.size() - static_cast<std::size_t>(k);
}

inline mpq_class probability(const std::string& s, int k) {
  mpq_class p(suffix_unique(s, k) ? 2 : 1, static_cast<unsigned long>(kmers(s, k).size()));
  p.canonicalize();
  return p;
}

/// Average of the gamechanger probability over all (w+k)-strings.
inline mpq_class density(int sigma, int k, int w) {
  mpq_class sum = 0;
  const auto all = all_strings(sigma, w + k);
  for (const auto& s : all) sum += probability(s, k);
  return sum / mpq_class(static_cast<unsigned long>(all.size()));
}

/// sigma^(w+k) (DR - 2/(w+1)) from the brute-force density.
inline mpq_class deviation(int sigma, int k, int w) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(sigma), static_cast<unsigned long>(w + k));
  mpq_class two(2, static_cast<unsigned long>(w + 1));
  two.canonicalize();
  return (density(sigma, k, w) - two) * mpq_class(scale);
}

/// Start of the minimal k-mer of a window under rank (lower rank = smaller),
/// leftmost on ties. rank maps a k-mer string to its position in the order.
using Rank = std::function<std::uint64_t(const std::string&)>;

inline std::size_t window_min(const std::string& s, std::size_t from, int w, int k, const Rank& rank) {
  std::size_t best = from;
  for (std::size_t i = from + 1; i < from + static_cast<std::size_t>(w); ++i) {
    if (rank(s.substr(i, static_cast<std::size_t>(k))) < rank(s.substr(best, static_cast<std::size_t>(k)))) best = i;
  }
  return best;
}

/// A context is charged when the minimizer of its second window differs from
/// that of its first window.
inline bool charged(const std::string& v, int k, int w, const Rank& rank) {
  return window_min(v, 0, w, k, rank) != window_min(v, 1, w, k, rank);
}

/// Marked positions of the minimizer markup, recomputed window by window.
inline std::vector<std::size_t> markup(const std::string& s, int k, int w, const Rank& rank) {
  std::set<std::size_t> marked;
  const std::size_t window = static_cast<std::size_t>(w + k - 1);
  for (std::size_t i = 0; i + window <= s.size(); ++i) marked.insert(window_min(s, i, w, k, rank));
  return {marked.begin(), marked.end()};
}

/// Rank of a k-mer string under "key, then lexicographic" ordering.
inline Rank keyed_rank(std::function<std::uint64_t(std::uint64_t)> key, int sigma) {
  return [key, sigma](const std::string& kmer) {
    std::uint64_t code = 0;
    for (char c : kmer) code = code * static_cast<std::uint64_t>(sigma) + static_cast<std::uint64_t>(c - '0');
    // Keys are compared first; codes are small, so the pair fits when keys are
    // below 2^40 (callers ensure this).
    return (key(code) << 20) | code;
  };
}

/// Mean over all (sigma^k)! orders of the fraction of charged contexts.
inline mpq_class average_over_orders(int sigma, int k, int w) {
  const auto ks = all_strings(sigma, k);
  std::vector<int> perm(ks.size());
  std::iota(perm.begin(), perm.end(), 0);
  const auto contexts = all_strings(sigma, w + k);
  mpz_class hits = 0;
  mpz_class orders = 0;
  do {
    Rank rank = [&](const std::string& kmer) {
      const auto it = std::find(ks.begin(), ks.end(), kmer);
      return static_cast<std::uint64_t>(perm[static_cast<std::size_t>(it - ks.begin())]);
    };
    for (const auto& v : contexts) {
      if (charged(v, k, w, rank)) ++hits;
    }
    ++orders;
  } while (std::next_permutation(perm.begin(), perm.end()));
  mpq_class r(hits, orders * static_cast<unsigned long>(contexts.size()));
  r.canonicalize();
  return r;
}

inline bool is_primitive(const std::string& s) {
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool power = true;
    for (std::size_t i = d; i < n && power; ++i) power = s[i] == s[i - d];
    if (power) return false;
  }
  return true;
}

inline std::uint64_t count_primitive(int sigma, int p) {
  std::uint64_t n = 0;
  for (const auto& s : all_strings(sigma, p)) n += is_primitive(s) ? 1 : 0;
  return n;
}

/// Smallest p with s[i] == s[i+p] for all i, by trying every p.
inline int period(const std::string& s) {
  for (std::size_t p = 1; p <= s.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < s.size() && ok; ++i) ok = s[i] == s[i + p];
    if (ok) return static_cast<int>(p);
  }
  return static_cast<int>(s.size());
}

struct Run {
  int start;  // 1-based inclusive
  int end;
  int period;
  bool operator<(const Run& o) const {
    return start != o.start ? start < o.start : (period != o.period ? period < o.period : end < o.end);
  }
  bool operator==(const Run& o) const { return start == o.start && end == o.end && period == o.period; }
};

/// Runs from the definition: every substring with minimal period p and length
/// >= 2p that cannot be extended on either side keeping period p.
inline std::vector<Run> runs(const std::string& s) {
  std::set<Run> out;
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      const int p = period(s.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(j - i)));
      if (j - i < 2 * p) continue;
      const bool left = i > 0 && s[static_cast<std::size_t>(i - 1)] == s[static_cast<std::size_t>(i - 1 + p)];
      const bool right = j < n && s[static_cast<std::size_t>(j)] == s[static_cast<std::size_t>(j - p)];
      if (!left && !right) out.insert({i + 1, j, p});
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace brute
