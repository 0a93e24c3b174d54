#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace randmin {

/// One character of the alphabet {0, ..., sigma-1}.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

inline constexpr int kMaxSigma = 255;

/// Default bound on sigma^(w+k) for anything that enumerates all contexts.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 34;

/// Thrown for parameter triples or arguments that violate a precondition.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed a configured resource cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sigma^exp if it fits in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t sigma, std::uint64_t exp);

/// Alphabet size, k-mer length and window k-mer count.
struct Params {
  int sigma = 2;
  int k = 1;
  int w = 1;

  /// Validating factory; throws InvalidParams.
  static Params make(int sigma, int k, int w);

  void validate() const;

  /// Length of one window: w k-mers.
  int window_length() const { return w + k - 1; }
  /// Length of a gamechanger context: w+1 k-mers.
  int context_length() const { return w + k; }

  /// sigma^(w+k); throws CapExceeded if above cap (or if it overflows 64 bits).
  std::uint64_t context_count(std::uint64_t cap = kDefaultEnumerationCap) const;

  friend bool operator==(const Params&, const Params&) = default;
};

std::string to_string(const Params& p);

/// Throws InvalidParams unless every symbol is below sigma.
void check_alphabet(WordView v, int sigma);

Word parse_word(const std::string& digits);
std::string format_word(WordView v);

}  // namespace randmin
