#include "randmin/markup.hpp"

namespace randmin {

SlidingMinimizer::SlidingMinimizer(std::size_t width) : width_(width), ring_(width + 1) {
  if (width == 0) throw InvalidParams("SlidingMinimizer: width must be positive");
}

void SlidingMinimizer::reset() {
  head_ = 0;
  size_ = 0;
  pushed_ = 0;
}

void SlidingMinimizer::push(std::uint64_t key, KmerCode code, std::uint64_t pos) {
  const Entry e{key, code, pos};
  const std::size_t cap = ring_.size();
  // Drop strictly worse entries from the back; equal ones stay so the
  // leftmost occurrence wins.
  while (size_ > 0) {
    const std::size_t back = (head_ + size_ - 1) % cap;
    if (!before(e, ring_[back])) break;
    --size_;
  }
  ring_[(head_ + size_) % cap] = e;
  ++size_;
  ++pushed_;
  while (pos - ring_[head_].pos >= width_) {
    head_ = (head_ + 1) % cap;
    --size_;
  }
}

std::vector<std::size_t> markup(WordView s, const OrderKey& key, const Params& params) {
  params.validate();
  check_alphabet(s, params.sigma);
  const auto window = static_cast<std::size_t>(params.window_length());
  if (s.size() < window) {
    throw InvalidParams("string of length " + std::to_string(s.size()) +
                        " is shorter than one window (w+k-1 = " + std::to_string(window) + ")");
  }
  const KmerCodec codec(params.sigma, params.k);
  const auto uk = static_cast<std::size_t>(params.k);
  SlidingMinimizer mins(static_cast<std::size_t>(params.w));
  std::vector<std::size_t> marked;
  KmerCode code = codec.encode(s.first(uk));
  for (std::size_t i = 0; i + uk <= s.size(); ++i) {
    if (i > 0) code = codec.roll(code, s[i + uk - 1]);
    mins.push(key(code), code, i);
    if (mins.full()) {
      const auto chosen = static_cast<std::size_t>(mins.argmin());
      if (marked.empty() || marked.back() != chosen) marked.push_back(chosen);
    }
  }
  return marked;
}

}  // namespace randmin
