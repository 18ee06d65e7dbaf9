#include "delsch/modular.hpp"

#include <random>
#include <vector>

#include "delsch/errors.hpp"
#include "delsch/sequences.hpp"
#include "ds_test.hpp"

using namespace delsch;

namespace {

// Independent primality oracle: plain trial division.
bool trial_division_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

int main() {
  DS_TEST("residue_reduction");
  {
    DS_CHECK_EQ(Residue(-3, 5).value(), 2);
    DS_CHECK_EQ(Residue(25, 25).value(), 0);
    DS_CHECK_EQ(Residue(7, 5).value(), 2);
    DS_CHECK_EQ(Residue(-10, 5).value(), 0);
    DS_CHECK_THROWS(Residue(3, 1), BadModulus);
    DS_CHECK_THROWS(Residue(3, 0), BadModulus);
    DS_CHECK_THROWS(Residue(3, -7), BadModulus);
  }

  DS_TEST("alternating_delannoy_sum_mod_25");
  {
    // Brute-force oracle for sum_{k=1}^{4} (-1)^k k^2 D_k D_{k-1}.
    BigInt sum = 0;
    for (long k = 1; k <= 4; ++k) {
      BigInt term = BigInt(k) * k * delannoy_direct(k) * delannoy_direct(k - 1);
      if (k % 2 != 0) sum -= term; else sum += term;
    }
    DS_CHECK_EQ(sum, 316350);
    DS_CHECK_EQ(Residue(sum, 25).value(), 0);
  }

  DS_TEST("mod_inverse");
  {
    DS_CHECK_EQ(Residue(6, 25).inverse().value(), 21);
    DS_CHECK_EQ(Residue(1, 97).inverse().value(), 1);
    DS_CHECK_THROWS(Residue(5, 25).inverse(), NotInvertible);
    DS_CHECK_THROWS(Residue(0, 7).inverse(), NotInvertible);
  }

  DS_TEST("rational_residue");
  {
    // -5p/6 at p = 5 reduces to 0 mod 25
    DS_CHECK_EQ(rational_residue(BigInt(-5) * 5, 6, 25).value(), 0);
    DS_CHECK_EQ(rational_residue(1, 2, 7).value(), 4);  // 2*4 = 8 = 1 (mod 7)
    DS_CHECK_THROWS(rational_residue(1, 5, 25), NotInvertible);
  }

  DS_TEST("residue_ring_ops");
  {
    Residue a(8, 11), b(7, 11);
    DS_CHECK_EQ((a + b).value(), 4);
    DS_CHECK_EQ((a - b).value(), 1);
    DS_CHECK_EQ((a * b).value(), 1);
    DS_CHECK_EQ((-a).value(), 3);
    DS_CHECK_THROWS(a + Residue(1, 13), ModulusMismatch);
    DS_CHECK_THROWS(a * Residue(1, 13), ModulusMismatch);
  }

  DS_TEST("residue_properties_random");
  {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<long> mod_dist(2, 5000);
    std::uniform_int_distribution<long> val_dist(-100000, 100000);
    for (int trial = 0; trial < 500; ++trial) {
      BigInt m(mod_dist(rng));
      BigInt x(val_dist(rng));
      DS_CHECK_EQ((Residue(x, m) + Residue(-x, m)).value(), 0);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
      if (g == 1) {
        Residue a(x, m);
        DS_CHECK_EQ((a * a.inverse()).value(), 1);
      }
    }
  }

  DS_TEST("is_prime_small");
  {
    DS_CHECK(is_prime(2));
    DS_CHECK(!is_prime(25));
    DS_CHECK(is_prime(997));
    DS_CHECK(!is_prime(0));
    DS_CHECK(!is_prime(1));
    DS_CHECK(!is_prime(-7));
  }

  DS_TEST("is_prime_matches_trial_division");
  {
    for (long n = 0; n <= 10000; ++n) {
      if (is_prime(BigInt(n)) != trial_division_prime(n)) {
        DS_CHECK_EQ(n, -1);  // report the first disagreement
        break;
      }
    }
    DS_CHECK(true);
  }

  DS_TEST("is_prime_larger");
  {
    // Mersenne prime 2^61 - 1 and known strong-pseudoprime traps.
    DS_CHECK(is_prime(BigInt("2305843009213693951")));
    DS_CHECK(!is_prime(BigInt("2305843009213693953")));
    DS_CHECK(!is_prime(BigInt("3215031751")));  // spsp to bases 2,3,5,7
    DS_CHECK(!is_prime(BigInt("3474749660383")));
  }

  DS_TEST("primes_in_ranges");
  {
    auto expect = [](const std::vector<BigInt>& got, std::vector<long> want) {
      DS_CHECK_EQ(got.size(), want.size());
      for (size_t i = 0; i < got.size() && i < want.size(); ++i)
        DS_CHECK_EQ(got[i], want[i]);
    };
    expect(primes_in(4, 12), {5, 7, 11});
    expect(primes_in(24, 28), {});
    expect(primes_in(3, 3), {3});
    expect(primes_in(1, 10), {2, 3, 5, 7});
    expect(primes_in(2, 2), {2});
    DS_CHECK_THROWS(primes_in(5, 4), std::invalid_argument);
  }

  DS_TEST("primes_in_agrees_with_is_prime");
  {
    std::vector<BigInt> primes = primes_in(2, 10000);
    size_t idx = 0;
    for (long n = 2; n <= 10000; ++n) {
      bool in_list = idx < primes.size() && primes[idx] == n;
      DS_CHECK(in_list == is_prime(BigInt(n)));
      if (in_list) ++idx;
    }
    DS_CHECK_EQ(idx, primes.size());
  }

  return dstest::summary();
}
