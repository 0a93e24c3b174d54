#include "../brute.hpp"

#include "randmin/core.hpp"
#include "randmin/markup.hpp"

#include <doctest.h>

#include <random>

using namespace randmin;

TEST_SUITE("core") {

TEST_CASE("distinct k-mer counts agree with a set-based count") {
  for (const char* s : {"00000", "00100", "01010"}) {
    CHECK(count_distinct_kmers(parse_word(s), 3) == static_cast<int>(brute::kmers(s, 3).size()));
  }
  CHECK(count_distinct_kmers(parse_word("00000"), 3) == 1);
  CHECK(brute::kmers("00100", 3).size() == 3);
  CHECK(brute::kmers("01010", 3).size() == 2);
  CHECK(count_distinct_kmers(parse_word("00100"), 3) == 3);
  CHECK(count_distinct_kmers(parse_word("01010"), 3) == 2);
}

TEST_CASE("distinct k-mer count rejects k outside [1, |v|]") {
  CHECK_THROWS_AS(count_distinct_kmers(parse_word("010"), 4), InvalidParams);
  CHECK_THROWS_AS(count_distinct_kmers(parse_word("010"), 0), InvalidParams);
}

TEST_CASE("distinct k-mer count is invariant under reversal") {
  for (int n = 3; n <= 10; ++n) {
    for (const auto& s : brute::all_strings(2, n)) {
      Word v = parse_word(s);
      Word r(v.rbegin(), v.rend());
      for (int k = 1; k <= n; ++k) REQUIRE(count_distinct_kmers(v, k) == count_distinct_kmers(r, k));
    }
  }
}

TEST_CASE("gamechanger probability examples") {
  const Params p32 = Params::make(2, 3, 2);
  const Params p23 = Params::make(2, 2, 3);
  CHECK(gamechanger_probability(parse_word("00000"), p32) == 1);
  CHECK(gamechanger_probability(parse_word("00110"), p23) == brute::probability("00110", 2));
  CHECK(brute::probability("00110", 2) == mpq_class(1, 2));
  CHECK(gamechanger_probability(parse_word("00100"), p23) == brute::probability("00100", 2));
  CHECK(brute::probability("00100", 2) == mpq_class(1, 3));
}

TEST_CASE("gamechanger probability matches the reference on every context") {
  for (int sigma : {2, 3}) {
    for (int k = 1; k <= 3; ++k) {
      for (int w = 1; w <= 4; ++w) {
        if (sigma == 3 && k + w > 6) continue;
        const Params p = Params::make(sigma, k, w);
        for (const auto& s : brute::all_strings(sigma, w + k)) {
          const Word v = parse_word(s);
          const BigRational got = gamechanger_probability(v, p);
          REQUIRE(got == brute::probability(s, k));
          CHECK(got.get_den() <= w + 1);
          if (brute::kmers(s, k).size() == static_cast<std::size_t>(w + 1)) CHECK(got == make_rational(2, w + 1));
        }
      }
    }
  }
}

TEST_CASE("gamechanger probability rejects wrong lengths") {
  CHECK_THROWS_AS(gamechanger_probability(parse_word("0000"), Params::make(2, 3, 2)), InvalidParams);
  CHECK_THROWS_AS(gamechanger_probability(parse_word("00020"), Params::make(2, 3, 2)), InvalidParams);
}

TEST_CASE("is_gamechanger examples under the identity order") {
  const Params p = Params::make(2, 2, 2);
  const auto rank = brute::keyed_rank(identity_key, 2);
  CHECK(is_gamechanger(parse_word("00000"), identity_key, Params::make(2, 3, 2)));
  CHECK(is_gamechanger(parse_word("0110"), identity_key, p) == brute::charged("0110", 2, 2, rank));
  CHECK(brute::charged("0110", 2, 2, rank));
  CHECK(is_gamechanger(parse_word("1010"), identity_key, p) == brute::charged("1010", 2, 2, rank));
  CHECK_FALSE(brute::charged("1010", 2, 2, rank));
}

TEST_CASE("is_gamechanger equals the charged-context definition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    const std::uint64_t salt = rng();
    // Keys below 2^40 so the reference can pack (key, code) into one integer;
    // the modulus forces frequent key ties between distinct k-mers.
    auto key = [salt](KmerCode c) { return ((c * 0x9e3779b97f4a7c15ULL) ^ salt) % 5; };
    for (int sigma : {2, 3}) {
      for (int k = 1; k <= 3; ++k) {
        for (int w = 1; w <= 4; ++w) {
          if (sigma == 3 && k + w > 6) continue;
          const Params p = Params::make(sigma, k, w);
          const auto rank = brute::keyed_rank(key, sigma);
          for (const auto& s : brute::all_strings(sigma, w + k)) {
            REQUIRE(is_gamechanger(parse_word(s), key, p) == brute::charged(s, k, w, rank));
          }
        }
      }
    }
  }
}

TEST_CASE("k-mer codec round trip and overflow") {
  const KmerCodec codec(3, 4);
  CHECK(codec.size() == 81);
  for (KmerCode c = 0; c < codec.size(); ++c) CHECK(codec.encode(codec.decode(c)) == c);
  CHECK(codec.encode(parse_word("0012")) == 5);
  CHECK(codec.roll(codec.encode(parse_word("0012")), 2) == codec.encode(parse_word("0122")));
  CHECK_THROWS_AS(KmerCodec(2, 64), CapExceeded);
  CHECK_NOTHROW(KmerCodec(2, 63));
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(Params::make(1, 2, 2), InvalidParams);
  CHECK_THROWS_AS(Params::make(2, 0, 2), InvalidParams);
  CHECK_THROWS_AS(Params::make(2, 2, 0), InvalidParams);
  const Params p = Params::make(2, 3, 4);
  CHECK(p.window_length() == 6);
  CHECK(p.context_length() == 7);
  CHECK(p.context_count() == 128);
  CHECK_THROWS_AS(Params::make(2, 30, 30).context_count(), CapExceeded);
}

TEST_CASE("sliding minimizer matches a window rescan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int w = 1 + static_cast<int>(rng() % 6);
    std::string s;
    for (int i = 0; i < 60; ++i) s.push_back(static_cast<char>('0' + rng() % 2));
    const std::uint64_t salt = rng();
    auto key = [salt](KmerCode c) { return ((c + salt) * 0xff51afd7ed558ccdULL) >> 40; };
    const auto got = markup(parse_word(s), key, Params::make(2, k, w));
    const auto want = brute::markup(s, k, w, brute::keyed_rank(key, 2));
    REQUIRE(got == want);
  }
}

}  // TEST_SUITE
