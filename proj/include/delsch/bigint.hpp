#pragma once

#include <gmpxx.h>

namespace delsch {

// Exact arbitrary-precision carriers. GMP supplies the representation
// (sign + magnitude, canonical zero, reduced fractions); nothing in this
// library ever touches floating point.
using BigInt = mpz_class;
using Rational = mpq_class;

bool is_odd(const BigInt& v);

// num/den with a zero-remainder guarantee; throws InexactDivision otherwise.
// `what` names the quantity for the error message.
BigInt div_exact(const BigInt& num, const BigInt& den, const char* what);

// C(n,k), with C(n,k) = 0 for k < 0 or k > n. Negative n also yields 0:
// nothing here needs the generalized binomial with a negative upper index,
// so the integer entry point deliberately does not provide it.
BigInt binomial(long n, long k);

// C(2j,j)/(j+1), division asserted exact. Requires j >= 0.
BigInt catalan(long j);

// N(n,k) = C(n,k) C(n,k-1) / n for 1 <= k <= n, and 0 for k <= 0 or k > n.
// Requires n >= 1; division asserted exact.
BigInt narayana(long n, long k);

// w(n,k) = C(n-1,k-1) C(n+k,k-1) / k. Requires n >= 1 and k >= 1; division
// asserted exact.
BigInt weight_w(long n, long k);

// base^exp for exp >= 0.
BigInt int_pow(const BigInt& base, unsigned long exp);

// Reduced num/den with positive denominator. Requires den != 0.
Rational make_rational(long num, long den);

}  // namespace delsch
