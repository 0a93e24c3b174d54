#pragma once

#include "randmin/params.hpp"

#include <cstdint>
#include <vector>

namespace randmin {

/// Suffix tree of the reversed DFS prefix, cut off at string depth k, built
/// right to left with Weiner's algorithm and undoable one symbol at a time.
///
/// The DFS string u = c_1..c_d is stored as a stack. The tree indexes
/// x$ = c_d..c_1 $, where $ is a terminator: for every position of x$ it
/// holds the string of the next min(k, remaining) characters. Strings without
/// $ are exactly the reversed k-mers of u, so the number of $-free leaves is
/// the number of distinct k-mers of u.
///
/// descend(a) prepends a to x$ (appends a to u). Per node we keep
///  - indicator bits I[b]: b followed by the first min(depth, k-1) characters
///    of the node label occurs in x$;
///  - Weiner links L[b]: the internal node labelled b + label, if any.
/// A leaf whose truncated label equals its parent's label shares the parent's
/// indicator bits. Each step walks at most k nodes up from the last inserted
/// leaf, and its journal entry (previous leaf, walk start, the node where the
/// walk stopped, split node, new leaf) reverts it in O(k).
class TruncatedSuffixTree {
 public:
  TruncatedSuffixTree(int sigma, int k);

  /// Appends a to the DFS string. Returns true iff the new k-suffix (once the
  /// string has at least k symbols) did not occur earlier.
  bool descend(Symbol a);
  /// Reverts the last descend. Throws std::logic_error without one.
  void undo();

  int depth() const { return static_cast<int>(stack_.size()) - 1; }
  int distinct() const { return distinct_; }
  std::size_t node_count() const { return parent_.size(); }

  /// Recounts $-free leaves of depth k by scanning all nodes.
  int count_kmer_leaves() const;

  /// Structural equality: nodes, links, indicator bits and DFS state.
  friend bool operator==(const TruncatedSuffixTree&, const TruncatedSuffixTree&) = default;

 private:
  static constexpr std::int32_t kNone = -1;
  static constexpr std::int32_t kRoot = 0;

  struct Step {
    std::int32_t prev_leaf;
    std::int32_t walk_start;
    std::int32_t stop;   // first node with I[a] set, or kNone
    std::int32_t split;  // node created by splitting an edge, or kNone
    bool new_leaf;
    bool new_kmer;

    friend bool operator==(const Step&, const Step&) = default;
  };

  int sigma_;
  int k_;
  Symbol terminator_;

  // Stack of DFS symbols; index 0 holds the terminator.
  std::vector<Symbol> stack_;

  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> depth_;
  std::vector<std::int32_t> start_;  // stack index where some occurrence starts
  std::vector<std::uint8_t> leaf_;
  std::vector<std::int32_t> child_;      // (sigma+1) per node
  std::vector<std::int32_t> link_;       // sigma per node
  std::vector<std::uint8_t> indicator_;  // sigma per node

  std::vector<Step> journal_;
  std::int32_t current_leaf_ = kNone;
  int distinct_ = 0;

  Symbol label_at(std::int32_t node, int offset) const {
    return stack_[static_cast<std::size_t>(start_[static_cast<std::size_t>(node)] - offset)];
  }
  std::int32_t& child(std::int32_t node, Symbol c) {
    return child_[static_cast<std::size_t>(node) * static_cast<std::size_t>(sigma_ + 1) + c];
  }
  std::int32_t& link(std::int32_t node, Symbol a) {
    return link_[static_cast<std::size_t>(node) * static_cast<std::size_t>(sigma_) + a];
  }
  std::uint8_t& indicator(std::int32_t node, Symbol a) {
    return indicator_[static_cast<std::size_t>(node) * static_cast<std::size_t>(sigma_) + a];
  }
  int depth_of(std::int32_t node) const { return depth_[static_cast<std::size_t>(node)]; }
  std::int32_t parent_of(std::int32_t node) const { return parent_[static_cast<std::size_t>(node)]; }
  int truncated_length(std::int32_t node) const;
  std::int32_t walk_start(std::int32_t leaf) const;
  std::int32_t new_node(std::int32_t parent, int depth, int start, bool leaf);
  void pop_node();
};

}  // namespace randmin
