#include "delsch/poly_families.hpp"

#include <stdexcept>

#include "delsch/errors.hpp"

namespace delsch {

namespace {

const IntPoly& one_plus_2x() {
  static const IntPoly p{1, 2};
  return p;
}

const IntPoly& x_times_x_plus_1() {
  static const IntPoly p{0, 1, 1};
  return p;
}

}  // namespace

IntPoly delannoy_poly(long n) {
  if (n < 0) throw std::invalid_argument("delannoy_poly: n must be >= 0");
  std::vector<BigInt> cs(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k)
    cs[static_cast<size_t>(k)] = binomial(n, k) * binomial(n + k, k);
  return IntPoly(std::move(cs));
}

IntPoly large_schroder_poly(long n) {
  if (n < 0) throw std::invalid_argument("large_schroder_poly: n must be >= 0");
  std::vector<BigInt> cs(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    cs[static_cast<size_t>(k)] = div_exact(binomial(n, k) * binomial(n + k, k),
                                           BigInt(k + 1), "large_schroder_poly");
  }
  return IntPoly(std::move(cs));
}

IntPoly little_schroder_poly(long n) {
  if (n < 0) throw std::invalid_argument("little_schroder_poly: n must be >= 0");
  if (n == 0) return IntPoly{1};  // library convention
  // Powers of (x+1) up to n-1, built once per call.
  std::vector<IntPoly> xp1(static_cast<size_t>(n));
  xp1[0] = IntPoly{1};
  for (size_t i = 1; i < xp1.size(); ++i) xp1[i] = xp1[i - 1] * IntPoly{1, 1};
  IntPoly total;
  for (long k = 1; k <= n; ++k) {
    IntPoly term = narayana(n, k) * xp1[static_cast<size_t>(n - k)];
    total += term * IntPoly::monomial(1, static_cast<size_t>(k - 1));
  }
  return total;
}

IntPoly little_schroder_poly_alt(long n) {
  if (n < 0) throw std::invalid_argument("little_schroder_poly_alt: n must be >= 0");
  if (n == 0) return IntPoly{1};
  const long m = n - 1;
  std::vector<IntPoly> u(static_cast<size_t>(m) + 1);  // (2x+1)^i
  u[0] = IntPoly{1};
  for (size_t i = 1; i < u.size(); ++i) u[i] = u[i - 1] * one_plus_2x();
  IntPoly v{1};  // (x(x+1))^k, updated incrementally
  IntPoly total;
  for (long k = 0; 2 * k <= m; ++k) {
    total += binomial(m, 2 * k) * catalan(k) * (u[static_cast<size_t>(m - 2 * k)] * v);
    v *= x_times_x_plus_1();
  }
  return total;
}

std::vector<IntPoly> little_schroder_poly_table(long n_max) {
  if (n_max < 1)
    throw std::invalid_argument("little_schroder_poly_table: n_max must be >= 1");
  std::vector<IntPoly> s(static_cast<size_t>(n_max) + 1);
  s[0] = IntPoly{1};  // convention; not produced by the recurrence
  s[1] = IntPoly{1};
  if (n_max >= 2) s[2] = IntPoly{1, 2};
  for (long k = 1; k + 2 <= n_max; ++k) {
    IntPoly rhs = BigInt(3 + 2 * k) * (one_plus_2x() * s[static_cast<size_t>(k) + 1]) -
                  BigInt(k) * s[static_cast<size_t>(k)];
    s[static_cast<size_t>(k) + 2] =
        div_exact(rhs, BigInt(k + 3), "little schroder poly recurrence");
  }
  return s;
}

}  // namespace delsch
