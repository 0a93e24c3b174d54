#include "../brute.hpp"

#include "randmin/core.hpp"
#include "randmin/structure.hpp"

#include <doctest.h>

#include <set>

using namespace randmin;

namespace {

std::vector<brute::Run> library_runs(const std::string& s) {
  std::vector<brute::Run> out;
  for (const MajorRun& r : find_runs(parse_word(s))) out.push_back({r.start, r.end, r.period});
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<brute::Run> brute_major(const std::string& s) {
  std::optional<brute::Run> found;
  for (const auto& r : brute::runs(s)) {
    if (2 * (r.end - r.start + 1) >= static_cast<int>(s.size()) + 2 * r.period) found = r;
  }
  return found;
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("minimal period matches trial division") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& s : brute::all_strings(2, n)) REQUIRE(minimal_period(parse_word(s)) == brute::period(s));
  }
}

TEST_CASE("runs match the definition") {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& s : brute::all_strings(2, n)) REQUIRE(library_runs(s) == brute::runs(s));
  }
  for (int n = 2; n <= 7; ++n) {
    for (const auto& s : brute::all_strings(3, n)) REQUIRE(library_runs(s) == brute::runs(s));
  }
}

TEST_CASE("major run examples") {
  CHECK(find_major_run(parse_word("0000000")) == MajorRun{1, 7, 1});
  const auto m = brute_major("0110110");
  REQUIRE(m.has_value());
  CHECK(find_major_run(parse_word("0110110")) == MajorRun{m->start, m->end, m->period});
  CHECK(*m == brute::Run{1, 7, 3});
  CHECK_FALSE(brute_major("0011").has_value());
  CHECK_FALSE(find_major_run(parse_word("0011")).has_value());
}

TEST_CASE("major run agrees with the reference") {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& s : brute::all_strings(2, n)) {
      const auto lib = find_major_run(parse_word(s));
      const auto ref = brute_major(s);
      REQUIRE(lib.has_value() == ref.has_value());
      if (lib) REQUIRE(brute::Run{lib->start, lib->end, lib->period} == *ref);
    }
  }
}

TEST_CASE("distinct k-mers read off the major run") {
  CHECK(distinct_kmers_via_run(parse_word("00000"), Params::make(2, 3, 2)) == 1);
  CHECK(brute::kmers("00000", 3).size() == 1);
  CHECK(distinct_kmers_via_run(parse_word("01010"), Params::make(2, 3, 2)) == 2);
  CHECK(brute::kmers("01010", 3).size() == 2);
  CHECK(distinct_kmers_via_run(parse_word("0110110"), Params::make(2, 4, 3)) == 3);
  CHECK(brute::kmers("0110110", 4).size() == 3);
  CHECK_THROWS_AS(distinct_kmers_via_run(parse_word("00011"), Params::make(2, 3, 2)), InvalidParams);
  for (int k = 1; k <= 6; ++k) {
    for (int w = 1; w <= k && k + w <= 11; ++w) {
      for (const auto& s : brute::all_strings(2, w + k)) {
        if (!brute::has_repeat(s, k)) continue;
        REQUIRE(distinct_kmers_via_run(parse_word(s), Params::make(2, k, w)) ==
                static_cast<int>(brute::kmers(s, k).size()));
      }
    }
  }
}

TEST_CASE("phi examples") {
  const Params p = Params::make(2, 3, 2);
  CHECK(format_word(phi(parse_word("00000"), p)) == "000000");
  CHECK(format_word(phi(parse_word("01010"), p)) == "010101");
  CHECK(format_word(phi(parse_word("00001"), p)) == "000001");
  CHECK(format_word(phi_inverse(parse_word("000000"), p)) == "00000");
  CHECK(format_word(phi_inverse(parse_word("010101"), p)) == "01010");
  CHECK(format_word(phi_inverse(parse_word("000001"), p)) == "00001");
}

TEST_CASE("phi is a probability-preserving bijection") {
  for (int sigma : {2, 3}) {
    for (int k = 1; k <= 6; ++k) {
      for (int w = 1; w <= k; ++w) {
        if (k + w > (sigma == 2 ? 10 : 6)) continue;
        const Params p = Params::make(sigma, k, w);
        std::set<std::string> image;
        std::size_t domain = 0;
        for (const auto& s : brute::all_strings(sigma, w + k)) {
          if (!brute::has_repeat(s, k)) continue;
          ++domain;
          const std::string u = brute::word(phi(parse_word(s), p));
          REQUIRE(u.size() == s.size() + 1);
          REQUIRE(brute::has_repeat(u, k + 1));
          REQUIRE(brute::probability(u, k + 1) == brute::probability(s, k));
          REQUIRE(brute::word(phi_inverse(parse_word(u), p)) == s);
          image.insert(u);
        }
        CHECK(image.size() == domain);
        std::size_t target = 0;
        for (const auto& u : brute::all_strings(sigma, w + k + 1)) target += brute::has_repeat(u, k + 1) ? 1 : 0;
        CHECK(target == domain);
      }
    }
  }
}

TEST_CASE("phi preconditions") {
  CHECK_THROWS_AS(phi(parse_word("00011"), Params::make(2, 3, 2)), InvalidParams);
  CHECK_THROWS_AS(phi(parse_word("0000"), Params::make(2, 1, 3)), InvalidParams);
  CHECK_THROWS_AS(phi_inverse(parse_word("000111"), Params::make(2, 3, 2)), InvalidParams);
}

}  // TEST_SUITE
