#include "randmin/suffix_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace randmin {

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("TruncatedSuffixTree invariant violated: ") + what);
}

}  // namespace

TruncatedSuffixTree::TruncatedSuffixTree(int sigma, int k)
    : sigma_(sigma), k_(k), terminator_(static_cast<Symbol>(sigma)) {
  if (sigma < 2 || sigma > kMaxSigma - 1) throw InvalidParams("TruncatedSuffixTree: bad sigma");
  if (k < 1) throw InvalidParams("TruncatedSuffixTree: k must be >= 1");
  stack_.push_back(terminator_);
  new_node(kNone, 0, 0, false);  // root
  // The tree of "$" alone: one leaf below the root.
  current_leaf_ = new_node(kRoot, 1, 0, true);
  child(kRoot, terminator_) = current_leaf_;
}

std::int32_t TruncatedSuffixTree::new_node(std::int32_t parent, int depth, int start, bool leaf) {
  const auto id = static_cast<std::int32_t>(parent_.size());
  parent_.push_back(parent);
  depth_.push_back(depth);
  start_.push_back(start);
  leaf_.push_back(leaf ? 1 : 0);
  child_.insert(child_.end(), static_cast<std::size_t>(sigma_ + 1), kNone);
  link_.insert(link_.end(), static_cast<std::size_t>(sigma_), kNone);
  indicator_.insert(indicator_.end(), static_cast<std::size_t>(sigma_), 0);
  return id;
}

void TruncatedSuffixTree::pop_node() {
  parent_.pop_back();
  depth_.pop_back();
  start_.pop_back();
  leaf_.pop_back();
  child_.resize(child_.size() - static_cast<std::size_t>(sigma_ + 1));
  link_.resize(link_.size() - static_cast<std::size_t>(sigma_));
  indicator_.resize(indicator_.size() - static_cast<std::size_t>(sigma_));
}

int TruncatedSuffixTree::truncated_length(std::int32_t node) const {
  return std::min(depth_of(node), k_ - 1);
}

std::int32_t TruncatedSuffixTree::walk_start(std::int32_t leaf) const {
  // Leaves hanging at depth k-1 have the same truncated label as their parent.
  const std::int32_t p = parent_of(leaf);
  return truncated_length(leaf) == depth_of(p) ? p : leaf;
}

bool TruncatedSuffixTree::descend(Symbol a) {
  if (a >= sigma_) throw InvalidParams("TruncatedSuffixTree::descend: symbol outside alphabet");
  stack_.push_back(a);
  const int top = depth();
  // Character at offset t of the new string a x$.
  auto fresh = [&](int t) { return stack_[static_cast<std::size_t>(top - t)]; };
  const int new_length = std::min(k_, top + 1);

  Step step{current_leaf_, walk_start(current_leaf_), kNone, kNone, false, false};

  // Deepest node on the path of x$ whose truncated label can be preceded by a.
  std::int32_t stop = step.walk_start;
  while (stop != kNone && !indicator(stop, a)) stop = parent_of(stop);
  step.stop = stop;
  for (std::int32_t n = step.walk_start; n != stop; n = parent_of(n)) indicator(n, a) = 1;

  if (stop == kNone) {
    // a does not occur in x$: new leaf directly below the root.
    const std::int32_t leaf = new_node(kRoot, new_length, top, true);
    child(kRoot, a) = leaf;
    current_leaf_ = leaf;
    step.new_leaf = true;
  } else {
    const int head = truncated_length(stop) + 1;  // |a u'|
    // Locus of a u' is one edge below the Weiner link of the deepest ancestor
    // of stop that has one (or below the root).
    std::int32_t anchor = stop;
    while (anchor != kNone && link(anchor, a) == kNone) anchor = parent_of(anchor);
    const std::int32_t z = anchor == kNone ? kRoot : link(anchor, a);
    const int zd = depth_of(z);

    if (head >= new_length) {
      // The new string already occurs: it is an existing leaf.
      const std::int32_t existing = child(z, fresh(zd));
      check(existing != kNone && leaf_[static_cast<std::size_t>(existing)] &&
                depth_of(existing) == new_length,
            "repeated k-mer must be an existing leaf");
      current_leaf_ = existing;
    } else {
      std::int32_t attach = z;
      if (zd != head) {
        const std::int32_t below = child(z, fresh(zd));
        check(below != kNone && depth_of(below) > head, "split point must be inside an edge");
        const std::int32_t mid = new_node(z, head, start_[static_cast<std::size_t>(below)], false);
        child(z, fresh(zd)) = mid;
        child(mid, label_at(below, head)) = below;
        parent_[static_cast<std::size_t>(below)] = mid;
        std::copy_n(indicator_.begin() + static_cast<std::ptrdiff_t>(below) * sigma_, sigma_,
                    indicator_.begin() + static_cast<std::ptrdiff_t>(mid) * sigma_);
        link(stop, a) = mid;
        step.split = mid;
        attach = mid;
      }
      const std::int32_t leaf = new_node(attach, new_length, top, true);
      check(child(attach, fresh(head)) == kNone, "new leaf slot must be free");
      child(attach, fresh(head)) = leaf;
      current_leaf_ = leaf;
      step.new_leaf = true;
    }
  }

  // The new string is $-free exactly when the DFS string has k symbols or more.
  step.new_kmer = step.new_leaf && top >= k_;
  if (step.new_kmer) ++distinct_;
  journal_.push_back(step);
  return step.new_kmer;
}

void TruncatedSuffixTree::undo() {
  if (journal_.empty()) throw std::logic_error("TruncatedSuffixTree::undo without a matching descend");
  const Step step = journal_.back();
  journal_.pop_back();
  const Symbol a = stack_.back();

  if (step.new_leaf) {
    const auto leaf = static_cast<std::int32_t>(parent_.size()) - 1;
    const std::int32_t p = parent_of(leaf);
    child(p, label_at(leaf, depth_of(p))) = kNone;
    pop_node();
  }
  if (step.split != kNone) {
    const std::int32_t mid = step.split;
    const std::int32_t z = parent_of(mid);
    const std::int32_t below = child(mid, label_at(mid, depth_of(mid)));
    child(z, label_at(mid, depth_of(z))) = below;
    parent_[static_cast<std::size_t>(below)] = z;
    link(step.stop, a) = kNone;
    pop_node();
  }
  for (std::int32_t n = step.walk_start; n != step.stop; n = parent_of(n)) indicator(n, a) = 0;

  if (step.new_kmer) --distinct_;
  current_leaf_ = step.prev_leaf;
  stack_.pop_back();
}

int TruncatedSuffixTree::count_kmer_leaves() const {
  int n = 0;
  for (std::size_t id = 0; id < parent_.size(); ++id) {
    if (!leaf_[id] || depth_[id] != k_) continue;
    // The depth-k leaf starting at stack index k-1 ends with $.
    if (start_[id] == k_ - 1) continue;
    ++n;
  }
  return n;
}

}  // namespace randmin
