#include "randmin/closed_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace randmin {

namespace {

void check_sigma(int sigma) {
  if (sigma < 2) throw InvalidParams("sigma must be >= 2, got " + std::to_string(sigma));
}

void check_half_quadrant(const Params& params) {
  params.validate();
  if (params.w > params.k) {
    throw InvalidParams("the closed form needs w <= k (the half-quadrant), got " + to_string(params));
  }
}

BigRational two_over(int n) { return make_rational(2, n); }

BigInt sigma_pow(int sigma, int e) { return big_pow(static_cast<std::uint64_t>(sigma), static_cast<std::uint64_t>(e)); }

}  // namespace

PrimTable::PrimTable(int sigma, int w_max) : sigma_(sigma) {
  check_sigma(sigma);
  if (w_max < 1) throw InvalidParams("prim table needs w_max >= 1");
  values_.reserve(static_cast<std::size_t>(w_max));
  for (int p = 1; p <= w_max; ++p) values_.push_back(sigma_pow(sigma, p));
  // Non-primitive words of length p are u^(p/d) for primitive u of length d | p, d < p.
  for (int d = 1; d <= w_max; ++d) {
    const BigInt& pd = values_[static_cast<std::size_t>(d - 1)];
    for (int m = 2 * d; m <= w_max; m += d) values_[static_cast<std::size_t>(m - 1)] -= pd;
  }
}

PrimTable prim_table(int sigma, int w_max) { return PrimTable(sigma, w_max); }

std::vector<int> mobius_sieve(int n) {
  std::vector<int> spf(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 2; i <= n; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (int j = i; j <= n; j += i) {
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
    }
  }
  std::vector<int> mu(static_cast<std::size_t>(n) + 1, 0);
  if (n >= 1) mu[1] = 1;
  for (int i = 2; i <= n; ++i) {
    const int p = spf[static_cast<std::size_t>(i)];
    const int rest = i / p;
    mu[static_cast<std::size_t>(i)] = (rest % p == 0) ? 0 : -mu[static_cast<std::size_t>(rest)];
  }
  return mu;
}

BigInt prim_mobius(int sigma, int p) {
  check_sigma(sigma);
  if (p < 1) throw InvalidParams("prim_mobius needs p >= 1");
  const std::vector<int> mu = mobius_sieve(p);
  BigInt sum = 0;
  for (int d = 1; d <= p; ++d) {
    if (p % d != 0 || mu[static_cast<std::size_t>(d)] == 0) continue;
    const BigInt term = sigma_pow(sigma, p / d);
    if (mu[static_cast<std::size_t>(d)] > 0) sum += term; else sum -= term;
  }
  return sum;
}

BigInt rep_count(const Params& params) {
  check_half_quadrant(params);
  const int sigma = params.sigma;
  const int w = params.w;
  const PrimTable prim(sigma, w);
  BigRational total = 0;
  for (int p = 1; p <= w; ++p) {
    const BigRational factor = BigRational(w - p + 1) - make_rational(w - p, sigma);
    total += BigRational(prim[p] * sigma_pow(sigma, w - p)) * factor;
  }
  return require_integral(total, "|Rep|");
}

BigRational rep_prob_sum(const Params& params) {
  check_half_quadrant(params);
  const int sigma = params.sigma;
  const int w = params.w;
  const PrimTable prim(sigma, w);
  const BigRational s1 = make_rational(1, sigma);
  const BigRational s2 = make_rational(1, static_cast<std::int64_t>(sigma) * sigma);
  BigRational total = 0;
  for (int t = 1; t <= w; ++t) {
    BigRational inner = BigRational(prim[t]);
    for (int p = 1; p < t; ++p) {
      const int j = t - p;
      const BigRational shape = BigRational(2 * j + 1) - BigRational(4 * j - 1) * s1 + BigRational(2 * j - 2) * s2;
      inner += BigRational(prim[p] * sigma_pow(sigma, j)) * shape;
    }
    // Strings with t distinct k-mers: counted with weight 1/t or 2/t; the
    // total count at each t is an integer.
    require_integral(inner, "weighted count of strings with t distinct k-mers");
    total += inner / BigRational(t);
  }
  return total;
}

std::vector<BigRational> deviation_series(int sigma, int w_max) {
  check_sigma(sigma);
  if (w_max < 1) throw InvalidParams("deviation needs w >= 1");
  const PrimTable prim(sigma, w_max);
  const BigRational inv = make_rational(1, sigma);
  const BigRational one_minus = BigRational(1) - inv;
  // inner(t) = 2 (1 - 1/s)^2 B'(t) + (1 + 1/s - 2/s^2) A'(t)
  const BigRational coef_b = BigRational(2) * one_minus * one_minus;
  const BigRational coef_a = BigRational(1) + inv - BigRational(2) * inv * inv;

  // A(w) = sum_{p<=w} Prim(p) s^(w-p);  B(w) = sum_{p<=w} Prim(p) s^(w-p) (w-p).
  BigInt a_prev = 0;
  BigInt b_prev = 0;
  BigRational prob_sum = 0;
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(w_max));
  for (int t = 1; t <= w_max; ++t) {
    // A'(t) = s A(t-1), B'(t) = s (B(t-1) + A(t-1)) are the p < t sums.
    const BigInt a_inner = a_prev * sigma;
    const BigInt b_inner = (b_prev + a_prev) * sigma;
    const BigRational term = BigRational(prim[t]) + coef_b * BigRational(b_inner) + coef_a * BigRational(a_inner);
    prob_sum += term / BigRational(t);

    const BigInt a_cur = a_inner + prim[t];
    const BigInt b_cur = b_inner;
    const BigRational rep = BigRational(a_cur) + BigRational(b_cur) * one_minus;
    out.push_back(prob_sum - two_over(t + 1) * rep);
    a_prev = a_cur;
    b_prev = b_cur;
  }
  return out;
}

BigRational deviation(int sigma, int w) { return deviation_series(sigma, w).back(); }

BigRational density_closed_form(const Params& params) {
  check_half_quadrant(params);
  const BigRational dev = deviation(params.sigma, params.w);
  return two_over(params.w + 1) + dev / BigRational(sigma_pow(params.sigma, params.w + params.k));
}

BigRational density_factor(const BigRational& dr, int w) { return dr * BigRational(w + 1); }

BigRational vertical_step(const Params& params, const BigRational& dr_at_k) {
  check_half_quadrant(params);
  const BigRational base = two_over(params.w + 1);
  return base + (dr_at_k - base) / BigRational(params.sigma);
}

BigRational delta(int sigma, int w) {
  check_sigma(sigma);
  if (w < 1) throw InvalidParams("delta needs w >= 1");
  const PrimTable prim(sigma, w + 1);
  BigInt numer = 0;
  // S1 = sum_{j=0..w} (2j - w) s^j Prim(w+1-j)
  for (int j = 0; j <= w; ++j) numer += BigInt(2 * j - w) * sigma_pow(sigma, j) * prim[w + 1 - j];
  // S2 = sum_{j=0..w-1} (w - 2j) s^j Prim(w-j)
  for (int j = 0; j < w; ++j) numer += BigInt(w - 2 * j) * sigma_pow(sigma, j) * prim[w - j];
  return make_rational(numer, BigInt(static_cast<long>(w + 1) * (w + 2)));
}

BigRational published_delta_polynomial(int sigma, int w) {
  struct Poly {
    int denominator;
    std::array<int, 10> coeffs;  // sigma^w down to sigma^1
  };
  static constexpr std::array<Poly, 10> kPolys{{
      {3, {1}},
      {6, {1, 0}},
      {20, {2, 3, -3}},
      {30, {2, 2, -6, 4}},
      {42, {2, 1, 1, 8, -10}},
      {56, {2, 0, 2, 0, -14, 12}},
      {72, {2, -1, 3, 6, -11, 10, -5}},
      {90, {2, -2, 4, 4, -16, 16, -6, 0}},
      {110, {2, -3, 5, 2, -3, 13, -14, 9, -9}},
      {132, {2, -4, 6, 0, 0, 0, -12, 8, -18, 20}},
  }};
  check_sigma(sigma);
  if (w < 1 || w > 10) throw InvalidParams("published Delta polynomials cover 1 <= w <= 10, got " + std::to_string(w));
  const Poly& poly = kPolys[static_cast<std::size_t>(w - 1)];
  BigInt value = 0;
  for (int i = 0; i < w; ++i) value += BigInt(poly.coeffs[static_cast<std::size_t>(i)]) * sigma_pow(sigma, w - i);
  return make_rational(value, BigInt(poly.denominator));
}

bool delta_polynomial_check(int sigma, int w) { return delta(sigma, w) == published_delta_polynomial(sigma, w); }

CrossingReport find_crossing(int sigma, int w_cap) {
  check_sigma(sigma);
  if (w_cap < 2) throw InvalidParams("find_crossing needs w_cap >= 2");
  const std::vector<BigRational> devs = deviation_series(sigma, w_cap);
  CrossingReport report;
  report.sigma = sigma;
  report.w_cap = w_cap;
  int last_sign = 0;
  for (int w = 1; w <= w_cap; ++w) {
    const int s = sgn(devs[static_cast<std::size_t>(w - 1)]);
    if (s < 0 && w >= 2 && !report.first_negative) report.first_negative = w;
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++report.sign_changes;
    last_sign = s;
  }
  return report;
}

ScalingRange deviation_scaling(int sigma, int w_lo, int w_hi) {
  check_sigma(sigma);
  if (w_lo < 1 || w_hi < w_lo) throw InvalidParams("deviation_scaling needs 1 <= w_lo <= w_hi");
  const std::vector<BigRational> devs = deviation_series(sigma, w_hi);
  ScalingRange range{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int w = w_lo; w <= w_hi; ++w) {
    const BigRational scaled = devs[static_cast<std::size_t>(w - 1)] * BigRational(w) /
                               BigRational(sigma_pow(sigma, w));
    const double v = to_double(scaled);
    range.min = std::min(range.min, v);
    range.max = std::max(range.max, v);
  }
  return range;
}

}  // namespace randmin
