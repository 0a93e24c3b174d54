#pragma once

// Exact formulas for the expected density of a random order when w <= k.

#include "randmin/params.hpp"
#include "randmin/rational.hpp"

#include <optional>
#include <vector>

namespace randmin {

/// Prim_sigma(p) for p = 1..w_max: the number of primitive words of length p.
class PrimTable {
 public:
  /// Subtraction sieve: start from sigma^p and remove Prim(d) for each proper
  /// divisor d. O(w_max log w_max) subtractions.
  PrimTable(int sigma, int w_max);

  int sigma() const { return sigma_; }
  int max_length() const { return static_cast<int>(values_.size()); }
  const BigInt& operator[](int p) const { return values_.at(static_cast<std::size_t>(p - 1)); }

 private:
  int sigma_;
  std::vector<BigInt> values_;
};

PrimTable prim_table(int sigma, int w_max);

/// Moebius function mu(1..n) from a smallest-prime-factor sieve; entry 0 unused.
std::vector<int> mobius_sieve(int n);

/// Prim_sigma(p) = sum over d | p of mu(d) sigma^(p/d).
BigInt prim_mobius(int sigma, int p);

/// Number of (w+k)-strings with a repeated k-mer. Requires w <= k.
BigInt rep_count(const Params& params);

/// Sum of gamechanger probabilities over the strings counted by rep_count,
/// evaluated term by term. Requires w <= k.
BigRational rep_prob_sum(const Params& params);

/// Dev(w) = sigma^(w+k) (DR - 2/(w+1)), which does not depend on k once w <= k.
BigRational deviation(int sigma, int w);

/// Dev(1..w_max) in one pass: after the prim sieve each term costs O(1)
/// big-number operations thanks to running inner sums. Entry 0 is Dev(1).
std::vector<BigRational> deviation_series(int sigma, int w_max);

/// Exact DR for w <= k; throws InvalidParams outside that half-quadrant.
BigRational density_closed_form(const Params& params);

/// DFR = (w+1) DR.
BigRational density_factor(const BigRational& dr, int w);

/// DR(k+1, w) from DR(k, w). Requires w <= k.
BigRational vertical_step(const Params& params, const BigRational& dr_at_k);

/// Delta(w) = Dev(w+1) - Dev(w), from the two-sum expression
/// (S1 + S2) / ((w+1)(w+2)).
BigRational delta(int sigma, int w);

/// The published polynomial for Delta(w), 1 <= w <= 10, evaluated at sigma.
BigRational published_delta_polynomial(int sigma, int w);

/// delta(sigma, w) == published_delta_polynomial(sigma, w). w outside 1..10 throws.
bool delta_polynomial_check(int sigma, int w);

struct CrossingReport {
  int sigma = 0;
  int w_cap = 0;
  /// Smallest w in [2, w_cap] with Dev(w) < 0.
  std::optional<int> first_negative;
  /// Sign changes of Dev over [1, w_cap], zeros skipped.
  int sign_changes = 0;
  bool single_change() const { return sign_changes == 1; }
};

CrossingReport find_crossing(int sigma, int w_cap);

/// Range of Dev(w) * w / sigma^w over [w_lo, w_hi], as doubles.
struct ScalingRange {
  double min = 0.0;
  double max = 0.0;
};

ScalingRange deviation_scaling(int sigma, int w_lo, int w_hi);

}  // namespace randmin
