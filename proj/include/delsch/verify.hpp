#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "delsch/certificates.hpp"
#include "delsch/poly.hpp"
#include "delsch/report.hpp"
#include "delsch/sequences.hpp"

namespace delsch {

// A(n) = (2 / 3n(n+1)) sum_{k=1}^{n} (-1)^(n-k) k^2 D_k D_{k-1}. Three
// independent routes; every route's divisions are asserted exact.
enum class AMethod { normalized_sum, closed_form_d, single_sum };
BigInt compute_a(long n, AMethod method, const SequenceTable& delannoy);
BigInt compute_a(long n, AMethod method);
// All three routes; throws MethodMismatch if they disagree.
BigInt compute_a_checked(long n);

// B(n) = (1/n) sum_{k=1}^{n} (-1)^(n-k) (4k^2+2k-1) D_{k-1} s_k.
enum class BMethod { normalized_sum, closed_form_ds, single_sum };
BigInt compute_b(long n, BMethod method, const SequenceTable& delannoy,
                 const SequenceTable& little_schroder);
BigInt compute_b(long n, BMethod method);
BigInt compute_b_checked(long n);

// A(n) and B(n) are positive odd integers with all routes agreeing, for
// 1 <= n <= n_max.
VerificationReport check_theorem_1_1(long n_max);

// For a prime p > 3:
//   sum_{k=1}^{p-1} (-1)^k k^2 D_k D_{k-1}          = -5p/6  (mod p^2)
//   sum_{k=1}^{p}   (-1)^k (4k^2+2k-1) D_{k-1} s_k  = -4p    (mod p^2)
// Throws NotAPrime / PrimeTooSmall on a bad hypothesis.
VerificationReport check_theorem_1_2(long p);
VerificationReport check_theorem_1_2(long p, const SequenceTable& delannoy,
                                     const SequenceTable& little_schroder);

// For even n >= 2, 4 sum_{k=1}^{n} k(k+1)(k+2) s_k(x) s_{k+1}(x) divided by
// n(n+1)(n+2) and then by (1+2x)^3 lands in Z[x]; the quotient is returned.
// Throws OddN on an odd argument.
struct Theorem13Result {
  VerificationReport report;
  IntPoly quotient;
};
Theorem13Result check_theorem_1_3(long n);

// (D_n(D_{n+1}-3D_n) + D_{n-1}(D_n+3D_{n+1})) / 54 is a positive odd integer.
VerificationReport check_lemma_2_1(long n_max);

// (n+1) D_n s_n + (n+2) D_{n-1} s_{n+1} = 0 (mod 3), plus the linkage
// identity behind it: D_{n-1} = D_{n+1} - 4(2n+1) s_n.
VerificationReport check_lemma_2_2(long n_max);

// The five recurrences used by the certificates, each checked against
// values built from the defining sums (not from recurrence-built tables).
// Sign-alternating bindings are instantiated at both parities of n.
enum class RecurrenceId { a_sec2, b_sec2, a_sec2b, b_sec2b, s_poly };
VerificationReport check_recurrences(long n_max, RecurrenceId which);

// n D_n D_{n-1} = 3 sum_{j<n} (n-j) C(n+j,2j) C(2j,j)^2 2^j.
VerificationReport check_lemma_3_1(long n_max);

// sum_{k=j+1}^{n} (-1)^(n-k) k(k-j) C(k+j,2j)
//   = C(n+j+1,j) C(n-1,j) n(n+1) / (2 C(2j,j)), division exact.
VerificationReport check_lemma_3_2(long j_max, long n_max);

// D_{n-1} s_n = sum_{j<n} C(n+j,2j) C_j^2 (2j+1 - j(j+1)(2n+1)/(n(n+1))) 2^j,
// evaluated with exact rationals; the total must be the integer D_{n-1} s_n.
VerificationReport check_lemma_3_3(long n_max);

// The (4k^2+2k-1)-weighted alternating sum against
// w(n,j+1) n ((4j+2)n+4j+3) / C_j, compared as exact rationals.
VerificationReport check_lemma_3_4(long j_max, long n_max);

// (4j+3) C_j = 2 C(2j,j) + C(2j+1,j+1).
VerificationReport check_lemma_3_5(long j_max);

// For a prime p > 3, over j = 0..p-2:
//   sum C(2j,j) (-2)^j     = 1      (mod p)
//   sum C(2j+1,j+1) (-2)^j = 0      (mod p)
//   sum C(2j,j) j (-2)^j   = -4/9   (mod p)
VerificationReport check_lemma_3_6(long p);

// s_p = 2 and s_{p+1} = 3 (mod p) for an odd prime; D_{p-1} = 1 and
// D_p = 3 (mod p), the latter pair gating the verdict only for p > 3.
VerificationReport check_prime_values(long p);
VerificationReport check_prime_values(long p, const SequenceTable& delannoy,
                                      const SequenceTable& little_schroder);

// Both (s_{n+1}(x) - (1+2x)s_n(x)) / (x^2+x) and its mirror lie in Z[x].
VerificationReport check_lemma_4_1(long n_max);

// For even n, ((1+2x)(2+n)s_{n+1}(x)^2 + s_n(x)s_{n+1}(x)) / (1+2x)^3 lies
// in Z[x]; the quotient is returned. Throws OddN on an odd argument.
struct Lemma42Result {
  VerificationReport report;
  IntPoly quotient;
};
Lemma42Result check_lemma_4_2(long n);

// Sweeps a certificate over 1 <= n <= n_max, stopping at the first failure.
// Also the entry point for test fixtures that run deliberately corrupted
// specs.
VerificationReport run_certificate_claim(const CertificateSpec& spec, long n_max);

// -------------------------------------------------------------------------
// Claim registry: every checkable statement, keyed by the selector the CLI
// accepts, with its default sweep range.

struct ClaimParams {
  long n_max = 0;
  long p_min = 0;
  long p_max = 0;
  long j_max = 0;
};

struct ClaimOverrides {
  std::optional<long> n_max;
  std::optional<long> p_min;
  std::optional<long> p_max;
  std::optional<long> j_max;
};

struct Claim {
  std::string id;
  std::string statement;  // one-line description of what is checked
  ClaimParams defaults;
  bool even_n_required = false;  // an odd n_max override is a usage error
  std::function<VerificationReport(const ClaimParams&)> run;
};

const std::vector<Claim>& all_claims();
const Claim* find_claim(std::string_view id);
ClaimParams resolve_params(const Claim& claim, const ClaimOverrides& overrides);

}  // namespace delsch
