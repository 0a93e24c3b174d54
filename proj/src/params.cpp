#include "randmin/params.hpp"

namespace randmin {

std::optional<std::uint64_t> checked_pow(std::uint64_t sigma, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (sigma != 0 && r > UINT64_MAX / sigma) return std::nullopt;
    r *= sigma;
  }
  return r;
}

Params Params::make(int sigma, int k, int w) {
  Params p{sigma, k, w};
  p.validate();
  return p;
}

void Params::validate() const {
  if (sigma < 2 || sigma > kMaxSigma) {
    throw InvalidParams("sigma must be in [2, " + std::to_string(kMaxSigma) + "], got " +
                        std::to_string(sigma));
  }
  if (k < 1) throw InvalidParams("k must be >= 1, got " + std::to_string(k));
  if (w < 1) throw InvalidParams("w must be >= 1, got " + std::to_string(w));
}

std::uint64_t Params::context_count(std::uint64_t cap) const {
  const auto n = checked_pow(static_cast<std::uint64_t>(sigma), static_cast<std::uint64_t>(w + k));
  if (!n || *n > cap) {
    throw CapExceeded("sigma^(w+k) = " + std::to_string(sigma) + "^" + std::to_string(w + k) +
                      " exceeds the enumeration cap of " + std::to_string(cap) +
                      " contexts; lower k or w, or raise the cap");
  }
  return *n;
}

std::string to_string(const Params& p) {
  return "(sigma=" + std::to_string(p.sigma) + ", k=" + std::to_string(p.k) +
         ", w=" + std::to_string(p.w) + ")";
}

void check_alphabet(WordView v, int sigma) {
  for (Symbol c : v) {
    if (c >= sigma) {
      throw InvalidParams("symbol " + std::to_string(c) + " outside alphabet of size " +
                          std::to_string(sigma));
    }
  }
}

Word parse_word(const std::string& digits) {
  Word out;
  out.reserve(digits.size());
  for (char ch : digits) {
    if (ch >= '0' && ch <= '9') {
      out.push_back(static_cast<Symbol>(ch - '0'));
    } else if (ch >= 'a' && ch <= 'z') {
      out.push_back(static_cast<Symbol>(10 + ch - 'a'));
    } else {
      throw InvalidParams(std::string("cannot parse symbol '") + ch + "'");
    }
  }
  return out;
}

std::string format_word(WordView v) {
  std::string s;
  s.reserve(v.size());
  for (Symbol c : v) s.push_back(c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + c - 10));
  return s;
}

}  // namespace randmin
