#pragma once

// Periodicity in short strings: runs, the major run, and the map phi that
// lengthens a string with a repeated k-mer by one symbol.

#include "randmin/params.hpp"

#include <optional>
#include <vector>

namespace randmin {

/// A run v[start..end] (1-based, inclusive) with minimal period `period`.
struct MajorRun {
  int start = 0;
  int end = 0;
  int period = 0;

  int length() const { return end - start + 1; }
  friend bool operator==(const MajorRun&, const MajorRun&) = default;
};

/// Smallest p >= 1 such that s[i] == s[i+p] for all valid i (border method).
int minimal_period(WordView s);

/// Every run of v: a maximal substring of length >= 2p with minimal period p.
/// O(|v|^2) scan over periods. Sorted by (start, period).
std::vector<MajorRun> find_runs(WordView v);

/// The run with length >= |v|/2 + period, if any (there is at most one).
std::optional<MajorRun> find_major_run(WordView v);

/// True iff some k-mer occurs twice in v.
bool has_repeated_kmer(WordView v, int k);

/// Distinct k-mer count read off the major run: a run of length p+k+i leaves
/// w-i distinct k-mers. Requires w <= k and |v| = w+k; throws InvalidParams
/// if v has no major run of length >= p+k.
int distinct_kmers_via_run(WordView v, const Params& params);

/// phi: extends the major run by one period symbol and patches the first
/// symbol after it if the run would otherwise grow further. Maps strings of
/// length w+k with a repeated k-mer to strings of length w+k+1 with a repeated
/// (k+1)-mer. Requires w <= k.
Word phi(WordView v, const Params& params);

/// Inverse of phi. `params` describes the preimage, so |v_next| = w+k+1.
Word phi_inverse(WordView v_next, const Params& params);

}  // namespace randmin
