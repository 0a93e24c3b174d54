#pragma once

#include "randmin/kmer.hpp"
#include "randmin/oracle.hpp"
#include "randmin/suffix_tree.hpp"
#include "randmin/tally.hpp"

#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace randmin {

/// Occurrence counts of k-mer codes with a register of how many are present.
class KmerMultiset {
 public:
  /// Dense storage is used when sigma^k is at most this many codes.
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 20;

  explicit KmerMultiset(std::uint64_t code_space);

  /// Adds one occurrence; true iff the code was absent before.
  bool push(KmerCode code);
  /// Removes one occurrence; throws std::logic_error if the code is absent.
  void pop(KmerCode code);

  std::uint32_t count(KmerCode code) const;
  int distinct() const { return distinct_; }

 private:
  std::vector<std::uint32_t> dense_;
  std::unordered_map<KmerCode, std::uint32_t> sparse_;
  bool use_dense_;
  int distinct_ = 0;
};

/// DFS state that keeps a multiset of the k-mer codes of the current prefix.
class DictEngine {
 public:
  DictEngine(int sigma, int k);

  bool descend(Symbol a);
  void undo();

  int depth() const { return static_cast<int>(codes_.size()) - 1; }
  int distinct() const { return kmers_.distinct(); }

  friend bool operator==(const DictEngine& a, const DictEngine& b) {
    return a.codes_ == b.codes_ && a.distinct() == b.distinct();
  }

 private:
  KmerCodec codec_;
  KmerMultiset kmers_;
  // codes_[d] = code of the last min(d, k) symbols of the prefix of length d.
  std::vector<KmerCode> codes_;
};

enum class Engine { dict, weiner };

Engine parse_engine(std::string_view name);
std::string_view engine_name(Engine e);

struct FastOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 0;
  /// DFS prefixes of this length are distributed across workers.
  int split_depth = 4;
};

/// Tally of all contexts gathered by a depth-first walk of the prefix tree of
/// Sigma^(w+k), with distinct k-mer counts maintained incrementally.
LeafTally exact_tally_fast(const Params& params, Engine engine, const FastOptions& opts = {});

BigRational exact_density_fast(const Params& params, Engine engine, const FastOptions& opts = {});

}  // namespace randmin
