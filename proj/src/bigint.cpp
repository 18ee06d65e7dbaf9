#include "delsch/bigint.hpp"

#include <stdexcept>
#include <string>

#include "delsch/errors.hpp"

namespace delsch {

bool is_odd(const BigInt& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

BigInt div_exact(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw InexactDivision(std::string(what) + ": division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw InexactDivision(std::string(what) + ": " + num.get_str() +
                          " is not divisible by " + den.get_str());
  }
  return q;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt catalan(long j) {
  if (j < 0) throw std::invalid_argument("catalan: j must be >= 0");
  return div_exact(binomial(2 * j, j), BigInt(j + 1), "catalan");
}

BigInt narayana(long n, long k) {
  if (n < 1) throw std::invalid_argument("narayana: n must be >= 1");
  if (k <= 0 || k > n) return 0;
  return div_exact(binomial(n, k) * binomial(n, k - 1), BigInt(n), "narayana");
}

BigInt weight_w(long n, long k) {
  if (n < 1 || k < 1) throw std::invalid_argument("weight_w: n and k must be >= 1");
  return div_exact(binomial(n - 1, k - 1) * binomial(n + k, k - 1), BigInt(k),
                   "weight_w");
}

BigInt int_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace delsch
