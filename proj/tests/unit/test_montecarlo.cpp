#include "../brute.hpp"

#include "randmin/markup.hpp"
#include "randmin/montecarlo.hpp"

#include <doctest.h>

#include <cmath>
#include <tuple>

using namespace randmin;

TEST_SUITE("montecarlo") {

TEST_CASE("random strings are deterministic and roughly uniform") {
  const Word a = random_string(4, 100'000, 5, 0);
  CHECK(a == random_string(4, 100'000, 5, 0));
  CHECK(a != random_string(4, 100'000, 5, 1));
  CHECK(a != random_string(4, 100'000, 6, 0));
  std::vector<double> counts(4, 0.0);
  for (Symbol c : a) counts[c] += 1;
  double chi2 = 0;
  for (double c : counts) chi2 += (c - 25'000.0) * (c - 25'000.0) / 25'000.0;
  CHECK(chi2 < 30.0);  // 3 degrees of freedom
}

TEST_CASE("random orders are deterministic") {
  const RandomOrder a(9), b(9), c(10);
  CHECK(a.key(123) == b.key(123));
  CHECK(a.key(123) != c.key(123));
  CHECK(a.as_key()(77) == a.key(77));
}

TEST_CASE("window count one marks every k-mer") {
  const Params p = Params::make(2, 2, 1);
  CHECK(mc_density(p, {1000, 3, 1, 0}).mean == 1.0);
  CHECK(mc_gamechanger_density(p, {1000, 3, 1, 0}).mean == 1.0);
  CHECK(mc_context_density(p, {1000, 3, 1, 0}).mean == 1.0);
}

TEST_CASE("context estimator is the mean charged probability of the string") {
  for (auto [sigma, k, w] : {std::tuple{2, 2, 2}, std::tuple{3, 2, 4}, std::tuple{2, 3, 9}}) {
    const Params p = Params::make(sigma, k, w);
    const McEstimate e = mc_context_density(p, {300, 2, 5, 0});
    double sum = 0.0;
    for (std::uint64_t rep = 0; rep < 2; ++rep) {
      const std::string s = brute::word(random_string(sigma, 300, 5, rep));
      double rep_sum = 0.0;
      const std::size_t len = static_cast<std::size_t>(w + k);
      for (std::size_t i = 0; i + len <= s.size(); ++i) rep_sum += brute::probability(s.substr(i, len), k).get_d();
      sum += rep_sum / static_cast<double>(s.size() - len + 1);
    }
    CHECK(e.mean == doctest::Approx(sum / 2).epsilon(1e-12));
  }
}

TEST_CASE("context estimator has no order noise and respects the floor") {
  const Params p = Params::make(2, 2, 2);
  const McEstimate e = mc_context_density(p, {1'000'000, 10, 2024, 0});
  CHECK(std::abs(e.mean - 17.0 / 24.0) <= 4 * e.std_error);
  CHECK(e.std_error < mc_density(p, {1'000'000, 10, 2024, 0}).std_error);
  const McEstimate big = mc_context_density(Params::make(2, 3, 82), {100'000, 4, 1, 0});
  CHECK(big.mean >= 1.0 / 8);
}

TEST_CASE("sampled density near the exact value") {
  const Params p = Params::make(2, 2, 2);
  const double target = 17.0 / 24.0;
  const McEstimate a = mc_density(p, {1'000'000, 10, 2024, 0});
  CHECK(std::abs(a.mean - target) <= 4 * a.std_error);
  CHECK(a.std_error > 0);
  const McEstimate b = mc_gamechanger_density(p, {1'000'000, 10, 2024, 0});
  CHECK(std::abs(b.mean - target) <= 4 * b.std_error);
  CHECK(std::abs(a.mean - b.mean) <= 4 * std::hypot(a.std_error, b.std_error));
}

TEST_CASE("no repeated k-mers gives 2/(w+1)") {
  const Params p = Params::make(4, 12, 5);
  const McEstimate e = mc_gamechanger_density(p, {200'000, 8, 3, 0});
  CHECK(std::abs(e.mean - 1.0 / 3.0) <= 4 * e.std_error + 1e-4);
}

TEST_CASE("large windows stay between the trivial bounds") {
  const Params p = Params::make(4, 8, 100);
  const McEstimate e = mc_density(p, {1'000'000, 4, 8, 0});
  CHECK(e.mean >= std::max(1.0 / 100, std::pow(4.0, -8)));
  CHECK(e.mean <= 2.0 / 101 + 4 * e.std_error);
}

TEST_CASE("estimates are reproducible and thread independent") {
  const Params p = Params::make(3, 3, 7);
  const McEstimate a = mc_density(p, {50'000, 6, 42, 1});
  const McEstimate b = mc_density(p, {50'000, 6, 42, 4});
  CHECK(a == b);
  CHECK(a.total_windows == 6u * (50'000u - 9u + 1u));
  CHECK(mc_gamechanger_density(p, {50'000, 6, 42, 1}) == mc_gamechanger_density(p, {50'000, 6, 42, 3}));
}

TEST_CASE("large-w bound") {
  const double direct = 0.25 + 1.5 * std::pow(7.0 / 8.0, 51);
  CHECK(bigw_upper_bound(Params::make(2, 2, 50)) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(direct == doctest::Approx(0.2517).epsilon(1e-3));
  for (int k = 1; k <= 6; ++k) CHECK(bigw_upper_bound(Params::make(3, k, 10)) > std::pow(3.0, -k));
  const McEstimate e = mc_density(Params::make(2, 2, 2), {200'000, 4, 1, 0});
  CHECK(e.mean <= bigw_upper_bound(Params::make(2, 2, 2)));
  CHECK(bigw_window(2, 2) == 36);
}

TEST_CASE("marked positions shrink as the window grows") {
  for (int w = 1; w <= 6; ++w) {
    const SubsetReport r = check_markup_monotone(Params::make(2, 3, w), 20'000, 10, 5);
    CHECK(r.ok());
    CHECK(r.trials == 10);
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(mc_density(Params::make(2, 2, 2), {30, 1, 1, 0}), InvalidParams);
  CHECK_THROWS_AS(mc_density(Params::make(2, 70, 2), {10'000, 1, 1, 0}), CapExceeded);
  CHECK_THROWS_AS(mc_density(Params::make(2, 2, 2), {1000, 0, 1, 0}), InvalidParams);
}

}  // TEST_SUITE
