#pragma once

#include <ostream>
#include <vector>

#include "delsch/bigint.hpp"

namespace delsch {

// Value-with-modulus, always reduced into [0, modulus). Binary operations
// require equal moduli and throw ModulusMismatch otherwise.
class Residue {
 public:
  // Canonical reduction, correct for negative values. Throws BadModulus
  // for modulus <= 1.
  Residue(const BigInt& value, BigInt modulus);

  const BigInt& value() const { return value_; }
  const BigInt& modulus() const { return modulus_; }

  // Multiplicative inverse; throws NotInvertible when gcd(value, modulus) != 1.
  Residue inverse() const;

  Residue operator-() const { return Residue(-value_, modulus_); }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);

  bool operator==(const Residue&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value_ << " (mod " << r.modulus_ << ")";
  }

 private:
  BigInt value_;
  BigInt modulus_;
};

// num * den^-1 mod modulus; the standard reading of a rational constant in
// a congruence. Requires gcd(den, modulus) = 1.
Residue rational_residue(const BigInt& num, const BigInt& den, const BigInt& modulus);

// Exact primality: deterministic Miller-Rabin witnesses below the proven
// bound (covers everything under 2^64 and then some), trial division above.
// Never reports a pseudoprime.
bool is_prime(const BigInt& n);

// All primes p with lo <= p <= hi, ascending. Requires lo <= hi.
std::vector<BigInt> primes_in(const BigInt& lo, const BigInt& hi);

}  // namespace delsch
