#pragma once

#include <vector>

#include "delsch/poly.hpp"

namespace delsch {

// D_n(x) = sum_k C(n,k) C(n+k,k) x^k.
IntPoly delannoy_poly(long n);

// S_n(x) = sum_k C(n,k) C(n+k,k) x^k / (k+1); every coefficient division
// is asserted exact.
IntPoly large_schroder_poly(long n);

// s_n(x) = sum_{k=1}^{n} N(n,k) x^(k-1) (x+1)^(n-k) for n >= 1;
// s_0(x) = 1 by library convention.
IntPoly little_schroder_poly(long n);

// s_n(x) via the central-term expansion
//   s_{m+1}(x) = sum_k C(m,2k) C_k (2x+1)^(m-2k) (x(x+1))^k  with m = n-1.
// Kept as an independent route for cross-checking the Narayana form.
IntPoly little_schroder_poly_alt(long n);

// s_0(x)..s_{n_max}(x), indexed by n. Entry 0 is the convention 1; entries
// from 3 on come from (k+3) s_{k+2} = (3+2k)(1+2x) s_{k+1} - k s_k with
// seeds s_1 = 1, s_2 = 2x+1, every division by (k+3) asserted exact
// coefficient-wise. Requires n_max >= 1.
std::vector<IntPoly> little_schroder_poly_table(long n_max);

}  // namespace delsch
