#include "../brute.hpp"

#include "randmin/exact_enum.hpp"

#include <doctest.h>

#include <random>

using namespace randmin;

TEST_SUITE("exact_enum") {

TEST_CASE("both engines equal the naive sum") {
  for (int sigma : {2, 3}) {
    for (int k = 1; k <= 8; ++k) {
      for (int w = 1; w <= 8; ++w) {
        if (k + w > (sigma == 2 ? 12 : 7)) continue;
        const Params p = Params::make(sigma, k, w);
        CAPTURE(to_string(p));
        const BigRational naive = exact_density_naive(p);
        CHECK(exact_density_fast(p, Engine::dict) == naive);
        CHECK(exact_density_fast(p, Engine::weiner) == naive);
      }
    }
  }
}

TEST_CASE("engine examples against the reference") {
  CHECK(exact_density_fast(Params::make(2, 2, 2), Engine::dict) == make_rational(17, 24));
  CHECK(exact_density_fast(Params::make(2, 2, 2), Engine::weiner) == make_rational(17, 24));
  const Params p = Params::make(2, 5, 3);
  const BigRational ref = brute::density(2, 5, 3);
  CHECK(exact_density_fast(p, Engine::weiner) == ref);
  CHECK(exact_density_fast(p, Engine::dict) == ref);
  CHECK(exact_density_fast(Params::make(3, 3, 3), Engine::weiner) == brute::density(3, 3, 3));
}

TEST_CASE("larger alphabets") {
  for (int sigma : {4, 5}) {
    const Params p = Params::make(sigma, 2, 3);
    CHECK(exact_density_fast(p, Engine::weiner) == exact_density_naive(p));
  }
}

template <class Engine>
void check_descend_examples() {
  Engine e(2, 3);
  const Engine initial = e;
  e.descend(0);
  e.descend(0);
  e.descend(0);
  for (int i = 0; i < 3; ++i) e.undo();
  CHECK(e == initial);
  CHECK_THROWS_AS(e.undo(), std::logic_error);

  for (Symbol c : parse_word("0010")) e.descend(c);
  CHECK(e.descend(0));
  CHECK(e.distinct() == static_cast<int>(brute::kmers("00100", 3).size()));
  CHECK(e.distinct() == 3);
  for (int i = 0; i < 5; ++i) e.undo();

  for (Symbol c : parse_word("0101")) e.descend(c);
  CHECK_FALSE(e.descend(0));
  CHECK(e.distinct() == 2);
}

TEST_CASE("descend and undo examples") {
  check_descend_examples<DictEngine>();
  check_descend_examples<TruncatedSuffixTree>();
}

TEST_CASE("random walks keep counts, flags and structure consistent") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int sigma = 2 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % 6);
    const int length = 1 + static_cast<int>(rng() % 30);
    TruncatedSuffixTree tree(sigma, k);
    DictEngine dict(sigma, k);
    std::string s;
    std::vector<TruncatedSuffixTree> snapshots{tree};
    for (int i = 0; i < length; ++i) {
      const auto a = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(sigma));
      s.push_back(static_cast<char>('0' + a));
      const bool fresh_tree = tree.descend(a);
      const bool fresh_dict = dict.descend(a);
      REQUIRE(fresh_tree == fresh_dict);
      const int expected = static_cast<int>(s.size()) >= k ? static_cast<int>(brute::kmers(s, k).size()) : 0;
      REQUIRE(tree.distinct() == expected);
      REQUIRE(dict.distinct() == expected);
      REQUIRE(tree.count_kmer_leaves() == expected);
      if (static_cast<int>(s.size()) >= k) REQUIRE(fresh_tree == brute::suffix_unique(s, k));
      // Linear space: at most one leaf and one branching node per position,
      // plus the root and the terminator leaf.
      REQUIRE(tree.node_count() <= 2 * s.size() + 2);
      snapshots.push_back(tree);
    }
    for (int i = length; i > 0; --i) {
      tree.undo();
      REQUIRE(tree == snapshots[static_cast<std::size_t>(i - 1)]);
    }
  }
}

TEST_CASE("k-mer multiset") {
  for (std::uint64_t space : {std::uint64_t{16}, KmerMultiset::kDenseLimit * 4}) {
    KmerMultiset m(space);
    CHECK(m.push(5));
    CHECK_FALSE(m.push(5));
    CHECK(m.push(7));
    CHECK(m.distinct() == 2);
    CHECK(m.count(5) == 2);
    m.pop(5);
    CHECK(m.distinct() == 2);
    m.pop(5);
    CHECK(m.distinct() == 1);
    CHECK(m.count(5) == 0);
    CHECK_THROWS_AS(m.pop(5), std::logic_error);
  }
}

TEST_CASE("tallies do not depend on threads or split depth") {
  const Params p = Params::make(2, 4, 5);
  const LeafTally ref = naive_context_tally(p);
  for (Engine e : {Engine::dict, Engine::weiner}) {
    for (int split : {0, 1, 4, 9, 20}) {
      for (unsigned threads : {1u, 2u, 5u}) {
        CHECK(exact_tally_fast(p, e, {kDefaultEnumerationCap, threads, split}) == ref);
      }
    }
  }
}

TEST_CASE("engine names and caps") {
  CHECK(parse_engine("dict") == Engine::dict);
  CHECK(parse_engine("weiner") == Engine::weiner);
  CHECK(engine_name(Engine::weiner) == "weiner");
  CHECK_THROWS_AS(parse_engine("trie"), InvalidParams);
  CHECK_THROWS_AS(exact_density_fast(Params::make(2, 30, 30), Engine::dict), CapExceeded);
}

}  // TEST_SUITE
