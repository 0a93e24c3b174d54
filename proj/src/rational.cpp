#include "randmin/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace randmin {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

BigInt require_integral(const BigRational& q, const char* what) {
  if (q.get_den() != 1) {
    throw std::logic_error(std::string(what) + " is not integral: " + to_string(q));
  }
  return q.get_num();
}

double to_double(const BigRational& q) {
  if (q == 0) return 0.0;
  // mpq_get_d truncates but handles large magnitudes; fall back to logs when
  // the value itself under/overflows a double.
  const double lg = log_abs(q);
  if (lg > 700.0 || lg < -700.0) {
    return (q > 0 ? 1.0 : -1.0) * std::exp(lg);
  }
  return q.get_d();
}

double log_abs(const BigInt& z) {
  if (z == 0) return -INFINITY;
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double log_abs(const BigRational& q) {
  if (q == 0) return -INFINITY;
  return log_abs(q.get_num()) - log_abs(q.get_den());
}

std::string to_string(const BigRational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace randmin
