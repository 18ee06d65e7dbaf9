#include "delsch/bigint.hpp"

#include "delsch/errors.hpp"
#include "ds_test.hpp"

using namespace delsch;

int main() {
  DS_TEST("binomial_small_values");
  {
    DS_CHECK_EQ(binomial(4, 2), 6);
    DS_CHECK_EQ(binomial(7, 0), 1);
    DS_CHECK_EQ(binomial(5, 7), 0);
    DS_CHECK_EQ(binomial(3, -1), 0);
    DS_CHECK_EQ(binomial(-2, 0), 0);
    DS_CHECK_EQ(binomial(0, 0), 1);
    DS_CHECK_EQ(binomial(10, 5), 252);
  }

  DS_TEST("binomial_pascal_rule");
  {
    for (long n = 1; n <= 40; ++n) {
      for (long k = 0; k <= n; ++k) {
        DS_CHECK_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
      }
    }
  }

  DS_TEST("catalan_values");
  {
    DS_CHECK_EQ(catalan(0), 1);
    // oracle: the defining quotient evaluated directly
    DS_CHECK_EQ(catalan(3), div_exact(binomial(6, 3), BigInt(4), "test"));
    DS_CHECK_EQ(catalan(3), 5);
    DS_CHECK_EQ(catalan(5), div_exact(binomial(10, 5), BigInt(6), "test"));
    DS_CHECK_EQ(catalan(5), 42);
    DS_CHECK_THROWS(catalan(-1), std::invalid_argument);
  }

  DS_TEST("narayana_values");
  {
    DS_CHECK_EQ(narayana(4, 2), div_exact(binomial(4, 2) * binomial(4, 1), BigInt(4), "test"));
    DS_CHECK_EQ(narayana(4, 2), 6);
    DS_CHECK_EQ(narayana(3, 3), 1);
    DS_CHECK_EQ(narayana(5, 0), 0);
    DS_CHECK_EQ(narayana(5, 6), 0);
    DS_CHECK_EQ(narayana(5, -2), 0);
    DS_CHECK_THROWS(narayana(0, 1), std::invalid_argument);
  }

  DS_TEST("narayana_row_sums_are_catalan");
  {
    // sum_k N(n,k) = C_n, a classical identity; independent cross-check.
    for (long n = 1; n <= 30; ++n) {
      BigInt row = 0;
      for (long k = 1; k <= n; ++k) row += narayana(n, k);
      DS_CHECK_EQ(row, catalan(n));
    }
  }

  DS_TEST("weight_w_values");
  {
    DS_CHECK_EQ(weight_w(2, 1), 1);
    DS_CHECK_EQ(weight_w(3, 2), div_exact(binomial(2, 1) * binomial(5, 1), BigInt(2), "test"));
    DS_CHECK_EQ(weight_w(3, 2), 5);
    DS_CHECK_EQ(weight_w(5, 1), 1);
    DS_CHECK_THROWS(weight_w(0, 1), std::invalid_argument);
    DS_CHECK_THROWS(weight_w(1, 0), std::invalid_argument);
  }

  DS_TEST("narayana_and_weight_integrality_sweep");
  {
    // The exact divisions must never leave a remainder over the whole range;
    // div_exact throws if one does.
    for (long n = 1; n <= 200; ++n) {
      for (long k = 1; k <= n; ++k) {
        (void)narayana(n, k);
        (void)weight_w(n, k);
      }
    }
    DS_CHECK(true);
  }

  DS_TEST("div_exact_rejects_inexact");
  {
    DS_CHECK_EQ(div_exact(BigInt(12), BigInt(3), "test"), 4);
    DS_CHECK_THROWS(div_exact(BigInt(13), BigInt(3), "test"), InexactDivision);
    DS_CHECK_THROWS(div_exact(BigInt(1), BigInt(0), "test"), InexactDivision);
    DS_CHECK_EQ(div_exact(BigInt(-12), BigInt(3), "test"), -4);
  }

  DS_TEST("int_pow");
  {
    DS_CHECK_EQ(int_pow(2, 10), 1024);
    DS_CHECK_EQ(int_pow(3, 0), 1);
    DS_CHECK_EQ(int_pow(-2, 3), -8);
  }

  DS_TEST("make_rational_canonicalizes");
  {
    DS_CHECK_EQ(make_rational(2, 4), make_rational(1, 2));
    DS_CHECK_EQ(make_rational(-2, -4), make_rational(1, 2));
    DS_CHECK_EQ(make_rational(3, -6).get_den(), 2);
    DS_CHECK_THROWS(make_rational(1, 0), std::invalid_argument);
  }

  DS_TEST("is_odd");
  {
    DS_CHECK(is_odd(BigInt(3)));
    DS_CHECK(is_odd(BigInt(-3)));
    DS_CHECK(!is_odd(BigInt(0)));
  }

  return dstest::summary();
}
