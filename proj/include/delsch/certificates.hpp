#pragma once

#include <string>
#include <vector>

#include "delsch/poly.hpp"
#include "delsch/report.hpp"
#include "delsch/sequences.hpp"

namespace delsch {

// Which pair of sequences a_k, b_k a certificate is written against.
//   f2: a_k = (-1)^(n-k) D_k,   b_k = D_{k-1}
//   g2: a_k = D_{k-1},          b_k = (-1)^(n-k) s_k
//   f4: a_k = s_k(x),           b_k = s_{k+1}(x)
enum class CertBinding { f2, g2, f4 };

// One term of a certificate: coeff_k(k) * x_factor(x) * a_{k-1+a_off} * b_{k-1+b_off}.
// coeff_k is a polynomial in the summation index with rational coefficients,
// transcribed verbatim in factored form.
struct CertTerm {
  RatPoly coeff_k;
  IntPoly x_factor;
  int a_off = 0;
  int b_off = 0;
};

// A telescoping certificate F together with the summand it telescopes:
//   summand(k) = summand_coeff_k(k) * summand_x(x) * a_k * b_k = F(k+1) - F(k).
struct CertificateSpec {
  std::string id;
  CertBinding binding = CertBinding::f2;
  std::vector<CertTerm> f_terms;
  RatPoly summand_coeff_k;
  IntPoly summand_x;
};

const CertificateSpec& certificate_f2();
const CertificateSpec& certificate_g2();
const CertificateSpec& certificate_f4();
const std::vector<CertificateSpec>& shipped_certificates();
const CertificateSpec* find_certificate(const std::string& id);

// Test fixture: doubles the first term's coefficient polynomial. Zeros stay
// zero (so no out-of-range sequence index is ever touched) while the
// telescoping identity breaks at k = 1.
CertificateSpec corrupt_certificate(CertificateSpec spec);

// Shared read-only inputs for certificate evaluation. Integer certificates
// need the Delannoy table up to n+1 and (for g2) the little Schroeder table
// up to n+1; the polynomial certificate needs s_0(x)..s_{n+2}(x).
struct CertTables {
  const SequenceTable* delannoy = nullptr;
  const SequenceTable* little_schroder = nullptr;
  const std::vector<IntPoly>* schroder_polys = nullptr;
};

// Evaluates a_k, b_k, F(k) and summand(k) for one certificate bound at a
// fixed n. Terms whose scalar coefficient vanishes are skipped, which is
// what keeps the undefined D_{-1} out of F(1).
class CertEvaluator {
 public:
  CertEvaluator(const CertificateSpec& spec, const CertTables& tables, long n,
                int s0_convention = 1);

  RatPoly a(long k) const;
  RatPoly b(long k) const;
  RatPoly certificate(long k) const;  // F(k)
  RatPoly summand(long k) const;

 private:
  const CertificateSpec& spec_;
  const CertTables& tables_;
  long n_;
  int s0_;
};

// Full check at one n: F(1) = 0 (for f4 under both s_0 conventions),
// summand(k) = F(k+1) - F(k) exactly for k = 1..n, and the partial-sum
// closed forms for this certificate. Builds its own tables.
VerificationReport check_certificate(const CertificateSpec& spec, long n);
VerificationReport check_certificate(const CertificateSpec& spec, long n,
                                     const CertTables& tables);

}  // namespace delsch
