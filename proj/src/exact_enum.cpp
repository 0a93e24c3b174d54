#include "randmin/exact_enum.hpp"

#include "randmin/parallel.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace randmin {

KmerMultiset::KmerMultiset(std::uint64_t code_space) : use_dense_(code_space <= kDenseLimit) {
  if (use_dense_) dense_.assign(static_cast<std::size_t>(code_space), 0);
}

bool KmerMultiset::push(KmerCode code) {
  std::uint32_t& c = use_dense_ ? dense_[static_cast<std::size_t>(code)] : sparse_[code];
  if (c++ == 0) {
    ++distinct_;
    return true;
  }
  return false;
}

void KmerMultiset::pop(KmerCode code) {
  if (use_dense_) {
    std::uint32_t& c = dense_[static_cast<std::size_t>(code)];
    if (c == 0) throw std::logic_error("KmerMultiset::pop of an absent code");
    if (--c == 0) --distinct_;
    return;
  }
  auto it = sparse_.find(code);
  if (it == sparse_.end()) throw std::logic_error("KmerMultiset::pop of an absent code");
  if (--it->second == 0) {
    sparse_.erase(it);
    --distinct_;
  }
}

std::uint32_t KmerMultiset::count(KmerCode code) const {
  if (use_dense_) return code < dense_.size() ? dense_[static_cast<std::size_t>(code)] : 0;
  auto it = sparse_.find(code);
  return it == sparse_.end() ? 0 : it->second;
}

DictEngine::DictEngine(int sigma, int k) : codec_(sigma, k), kmers_(codec_.size()) { codes_.push_back(0); }

bool DictEngine::descend(Symbol a) {
  if (a >= codec_.sigma()) throw InvalidParams("DictEngine::descend: symbol outside alphabet");
  codes_.push_back(codec_.roll(codes_.back(), a));
  if (depth() < codec_.k()) return false;
  return kmers_.push(codes_.back());
}

void DictEngine::undo() {
  if (codes_.size() <= 1) throw std::logic_error("DictEngine::undo without a matching descend");
  if (depth() >= codec_.k()) kmers_.pop(codes_.back());
  codes_.pop_back();
}

Engine parse_engine(std::string_view name) {
  if (name == "dict") return Engine::dict;
  if (name == "weiner") return Engine::weiner;
  throw InvalidParams("unknown engine '" + std::string(name) + "' (expected dict or weiner)");
}

std::string_view engine_name(Engine e) { return e == Engine::dict ? "dict" : "weiner"; }

namespace {

template <class State>
void walk(State& state, int remaining, int sigma, bool last_new, LeafTally& tally) {
  if (remaining == 0) {
    tally.add(state.distinct(), last_new);
    return;
  }
  for (int a = 0; a < sigma; ++a) {
    const bool fresh = state.descend(static_cast<Symbol>(a));
    walk(state, remaining - 1, sigma, fresh, tally);
    state.undo();
  }
}

template <class State>
LeafTally run(const Params& params, const FastOptions& opts) {
  const int length = params.context_length();
  const int split = std::clamp(opts.split_depth, 0, length);
  const auto prefixes = *checked_pow(static_cast<std::uint64_t>(params.sigma), static_cast<std::uint64_t>(split));
  const unsigned workers = resolve_threads(opts.threads);
  std::vector<LeafTally> partial(workers, LeafTally(params.w + 1));
  std::vector<std::optional<State>> states(workers);

  parallel_for(static_cast<std::size_t>(prefixes), workers, [&](std::size_t task, unsigned worker) {
    Word prefix(static_cast<std::size_t>(split));
    context_from_index(task, params.sigma, prefix);
    // Each worker reuses one state; the prefix is undone after the task.
    auto& slot = states[worker];
    if (!slot) slot.emplace(params.sigma, params.k);
    State& state = *slot;
    bool last_new = false;
    for (Symbol c : prefix) last_new = state.descend(c);
    walk(state, length - split, params.sigma, last_new, partial[worker]);
    for (std::size_t i = 0; i < prefix.size(); ++i) state.undo();
  });

  LeafTally tally(params.w + 1);
  for (const auto& p : partial) tally.merge(p);
  return tally;
}

}  // namespace

LeafTally exact_tally_fast(const Params& params, Engine engine, const FastOptions& opts) {
  params.validate();
  params.context_count(opts.cap);
  if (engine == Engine::weiner) return run<TruncatedSuffixTree>(params, opts);
  (void)KmerCodec(params.sigma, params.k);  // rejects sigma^k overflow up front
  return run<DictEngine>(params, opts);
}

BigRational exact_density_fast(const Params& params, Engine engine, const FastOptions& opts) {
  const LeafTally tally = exact_tally_fast(params, engine, opts);
  BigRational dr = tally.probability_sum();
  dr /= BigRational(BigInt(static_cast<unsigned long>(tally.total())));
  return dr;
}

}  // namespace randmin
