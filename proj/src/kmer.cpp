#include "randmin/kmer.hpp"

namespace randmin {

KmerCodec::KmerCodec(int sigma, int k) : sigma_(sigma), k_(k) {
  if (sigma < 2 || sigma > kMaxSigma) throw InvalidParams("KmerCodec: bad sigma " + std::to_string(sigma));
  if (k < 1) throw InvalidParams("KmerCodec: k must be >= 1");
  const auto n = checked_pow(static_cast<std::uint64_t>(sigma), static_cast<std::uint64_t>(k));
  if (!n) {
    throw CapExceeded("sigma^k = " + std::to_string(sigma) + "^" + std::to_string(k) +
                      " does not fit in a 64-bit k-mer code");
  }
  size_ = *n;
  high_ = size_ / static_cast<std::uint64_t>(sigma);
}

KmerCode KmerCodec::encode(WordView kmer) const {
  if (kmer.size() != static_cast<std::size_t>(k_)) {
    throw InvalidParams("KmerCodec::encode: expected " + std::to_string(k_) + " symbols, got " +
                        std::to_string(kmer.size()));
  }
  KmerCode code = 0;
  for (Symbol c : kmer) {
    if (c >= sigma_) throw InvalidParams("KmerCodec::encode: symbol outside alphabet");
    code = code * static_cast<std::uint64_t>(sigma_) + c;
  }
  return code;
}

Word KmerCodec::decode(KmerCode code) const {
  if (code >= size_) throw InvalidParams("KmerCodec::decode: code out of range");
  Word out(static_cast<std::size_t>(k_));
  for (int i = k_ - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<Symbol>(code % static_cast<std::uint64_t>(sigma_));
    code /= static_cast<std::uint64_t>(sigma_);
  }
  return out;
}

}  // namespace randmin
