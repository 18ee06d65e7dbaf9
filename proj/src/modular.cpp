#include "delsch/modular.hpp"

#include <stdexcept>

#include "delsch/errors.hpp"

namespace delsch {

namespace {

BigInt reduce(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());  // result in [0, m)
  return r;
}

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus())
    throw ModulusMismatch("residue operation across moduli " +
                          a.modulus().get_str() + " and " + b.modulus().get_str());
}

BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Strong probable-prime test to base a for odd n = d * 2^s + 1.
bool strong_probable_prime(const BigInt& n, const BigInt& d, unsigned long s,
                           const BigInt& a) {
  BigInt x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = reduce(x * x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr unsigned long kSmallPrimes[] = {2,  3,  5,  7,  11, 13,
                                          17, 19, 23, 29, 31, 37};

// The 12-witness set {2..37} is a proven deterministic test below this bound.
const BigInt& miller_rabin_proven_bound() {
  static const BigInt b("3317044064679887385961981");
  return b;
}

}  // namespace

Residue::Residue(const BigInt& value, BigInt modulus)
    : modulus_(std::move(modulus)) {
  if (modulus_ <= 1)
    throw BadModulus("modulus must be > 1, got " + modulus_.get_str());
  value_ = reduce(value, modulus_);
}

Residue Residue::inverse() const {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t()) == 0)
    throw NotInvertible(value_.get_str() + " has no inverse mod " +
                        modulus_.get_str());
  return Residue(inv, modulus_);
}

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ * b.value_, a.modulus_);
}

Residue rational_residue(const BigInt& num, const BigInt& den, const BigInt& modulus) {
  return Residue(num, modulus) * Residue(den, modulus).inverse();
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < miller_rabin_proven_bound()) {
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long a : kSmallPrimes) {
      if (!strong_probable_prime(n, d, s, BigInt(a))) return false;
    }
    return true;
  }
  // Exact fallback for inputs beyond the proven witness bound. O(sqrt(n)),
  // acceptable because sweep ranges never get near it.
  BigInt d = 41;
  while (d * d <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    d += 2;
  }
  return true;
}

std::vector<BigInt> primes_in(const BigInt& lo, const BigInt& hi) {
  if (lo > hi) throw std::invalid_argument("primes_in: lo must be <= hi");
  std::vector<BigInt> out;
  if (lo <= 2 && hi >= 2) out.emplace_back(2);
  BigInt p = lo < 3 ? BigInt(3) : lo;
  if (mpz_even_p(p.get_mpz_t())) p += 1;
  while (p <= hi) {
    if (is_prime(p)) out.push_back(p);
    p += 2;
  }
  return out;
}

}  // namespace delsch
