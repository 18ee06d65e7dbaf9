#include "delsch/certificates.hpp"

#include "delsch/errors.hpp"
#include "delsch/poly_families.hpp"
#include "delsch/verify.hpp"
#include "ds_test.hpp"

using namespace delsch;

namespace {

struct Fixture {
  SequenceTable d = delannoy_table(16);
  SequenceTable s = little_schroder_table(16);
  std::vector<IntPoly> sp = little_schroder_poly_table(16);
  CertTables tables;

  Fixture() {
    tables.delannoy = &d;
    tables.little_schroder = &s;
    tables.schroder_polys = &sp;
  }
};

}  // namespace

int main() {
  Fixture fx;

  DS_TEST("shipped_certificates");
  {
    DS_CHECK_EQ(shipped_certificates().size(), 3u);
    DS_CHECK(find_certificate("cert-f2") != nullptr);
    DS_CHECK_EQ(find_certificate("cert-f2")->id, certificate_f2().id);
    DS_CHECK_EQ(find_certificate("cert-g2")->id, certificate_g2().id);
    DS_CHECK_EQ(find_certificate("cert-f4")->id, certificate_f4().id);
    DS_CHECK(find_certificate("cert-x9") == nullptr);
  }

  DS_TEST("f2_bindings_and_values_at_n2");
  {
    CertEvaluator ev(certificate_f2(), fx.tables, /*n=*/2);
    DS_CHECK_EQ(ev.a(1), RatPoly{Rational(-3)});  // (-1)^(2-1) D_1
    DS_CHECK_EQ(ev.a(2), RatPoly{Rational(13)});
    DS_CHECK_EQ(ev.b(1), RatPoly{Rational(1)});   // D_0
    DS_CHECK_EQ(ev.b(2), RatPoly{Rational(3)});
    DS_CHECK(ev.certificate(1).is_zero());
    // F(2) = -1/24 - 13/6 - 45/24 + 13/12 = -3
    DS_CHECK_EQ(ev.certificate(2), RatPoly{Rational(-3)});
    // telescoping step at k = 1: summand = 1^2 a_1 b_1 = -3
    DS_CHECK_EQ(ev.summand(1), RatPoly{Rational(-3)});
    DS_CHECK_EQ(ev.summand(1), ev.certificate(2) - ev.certificate(1));
  }

  DS_TEST("g2_bindings_and_values_at_n2");
  {
    CertEvaluator ev(certificate_g2(), fx.tables, /*n=*/2);
    DS_CHECK_EQ(ev.a(1), RatPoly{Rational(1)});    // D_0
    DS_CHECK_EQ(ev.b(1), RatPoly{Rational(-1)});   // (-1)^(2-1) s_1
    DS_CHECK(ev.certificate(1).is_zero());
    // G(2) = (1/3)(2 a_2 b_1 - 3 a_1 b_2) = (1/3)(2*3*(-1) - 3*1*3) = -5
    DS_CHECK_EQ(ev.certificate(2), RatPoly{Rational(-5)});
    DS_CHECK_EQ(ev.summand(1), RatPoly{Rational(-5)});
    DS_CHECK_EQ(ev.summand(1), ev.certificate(2) - ev.certificate(1));
  }

  DS_TEST("f4_boundary_and_first_step");
  {
    CertEvaluator ev(certificate_f4(), fx.tables, /*n=*/4);
    DS_CHECK(ev.certificate(1).is_zero());
    CertEvaluator ev0(certificate_f4(), fx.tables, /*n=*/4, /*s0_convention=*/0);
    DS_CHECK(ev0.certificate(1).is_zero());
    // F(2) = -24 (x^2+x)(2x+1), frozen from a hand expansion
    IntPoly expected = BigInt(-24) * (IntPoly({0, 1, 1}) * IntPoly({1, 2}));
    DS_CHECK_EQ(ev.certificate(2), to_rational(expected));
    DS_CHECK_EQ(ev.certificate(2), to_rational(IntPoly({0, -24, -72, -48})));
    DS_CHECK_EQ(ev.summand(1), ev.certificate(2) - ev.certificate(1));
  }

  DS_TEST("check_certificate_passes_small_range");
  {
    for (long n = 1; n <= 12; ++n) {
      for (const CertificateSpec& spec : shipped_certificates()) {
        VerificationReport rep = check_certificate(spec, n, fx.tables);
        DS_CHECK(rep.pass);
        DS_CHECK_EQ(rep.instances_checked, static_cast<std::uint64_t>(n));
      }
    }
  }

  DS_TEST("certificate_claim_sweep");
  {
    for (const CertificateSpec& spec : shipped_certificates()) {
      VerificationReport rep = run_certificate_claim(spec, 14);
      DS_CHECK(rep.pass);
      DS_CHECK_EQ(rep.instances_checked, 14u);
      DS_CHECK_EQ(rep.claim_id, spec.id);
    }
  }

  DS_TEST("corrupted_certificate_fails_minimally");
  {
    for (const CertificateSpec& spec : shipped_certificates()) {
      CertificateSpec bad = corrupt_certificate(spec);
      VerificationReport rep = run_certificate_claim(bad, 10);
      DS_CHECK(!rep.pass);
      DS_CHECK(rep.counterexample.has_value());
      if (rep.counterexample) {
        // first failure is the smallest witness: n = 1, k = 1
        DS_CHECK_EQ(rep.counterexample->params[0].second, "1");
        DS_CHECK_EQ(rep.counterexample->params[1].second, "1");
        DS_CHECK(rep.counterexample->lhs != rep.counterexample->rhs);
      }
    }
  }

  DS_TEST("counterexample_reproducibility");
  {
    CertificateSpec bad = corrupt_certificate(certificate_f2());
    VerificationReport rep = run_certificate_claim(bad, 10);
    DS_CHECK(!rep.pass);
    if (rep.counterexample) {
      long n = std::stol(rep.counterexample->params[0].second);
      long k = std::stol(rep.counterexample->params[1].second);
      CertEvaluator ev(bad, fx.tables, n);
      RatPoly lhs = ev.summand(k);
      RatPoly rhs = ev.certificate(k + 1) - ev.certificate(k);
      DS_CHECK_EQ(lhs.to_string(), rep.counterexample->lhs);
      DS_CHECK_EQ(rhs.to_string(), rep.counterexample->rhs);
      DS_CHECK(lhs != rhs);
    }
  }

  DS_TEST("report_serialization");
  {
    VerificationReport good = run_certificate_claim(certificate_g2(), 6);
    auto gj = good.to_json();
    DS_CHECK_EQ(gj["claim_id"], "cert-g2");
    DS_CHECK_EQ(gj["status"], "pass");
    DS_CHECK(gj["counterexample"].is_null());
    DS_CHECK_EQ(good.to_json(/*zero_timing=*/true)["elapsed_ms"], 0);
    DS_CHECK(good.summary().find("[pass] cert-g2") == 0);

    VerificationReport bad = run_certificate_claim(corrupt_certificate(certificate_g2()), 6);
    auto bj = bad.to_json();
    DS_CHECK_EQ(bj["status"], "fail");
    DS_CHECK_EQ(bj["counterexample"]["params"]["k"], "1");
    DS_CHECK(bj["counterexample"]["lhs"].is_string());
    DS_CHECK(bad.summary().find("counterexample:") != std::string::npos);
  }

  DS_TEST("check_certificate_argument_validation");
  {
    DS_CHECK_THROWS(check_certificate(certificate_f2(), 0), std::invalid_argument);
    DS_CHECK_THROWS(run_certificate_claim(certificate_f2(), 0), std::invalid_argument);
  }

  return dstest::summary();
}
