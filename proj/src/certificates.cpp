#include "delsch/certificates.hpp"

#include <stdexcept>
#include <utility>

#include "delsch/errors.hpp"
#include "delsch/poly_families.hpp"

namespace delsch {

namespace {

RatPoly kvar() { return RatPoly::monomial(Rational(1), 1); }
RatPoly kc(long v) { return RatPoly::constant(Rational(v)); }
RatPoly kr(long num, long den) { return RatPoly::constant(make_rational(num, den)); }

const IntPoly kOne{1};
const IntPoly kOnePlus2x{1, 2};
const IntPoly kXSquaredPlusX{0, 1, 1};

CertificateSpec build_f2() {
  const RatPoly k = kvar();
  CertificateSpec spec;
  spec.id = "cert-f2";
  spec.binding = CertBinding::f2;
  spec.f_terms = {
      {kr(1, 72) * (k - kc(1)), kOne, 0, 0},
      {kr(1, 12) * k * (kc(1) - k), kOne, 1, 0},
      {kr(1, 24) * (kc(2) * k * k - kc(2) * k + kc(1)), kOne, 0, 1},
      {kr(1, 72) * k, kOne, 1, 1},
  };
  spec.summand_coeff_k = k * k;
  spec.summand_x = kOne;
  return spec;
}

CertificateSpec build_g2() {
  const RatPoly k = kvar();
  CertificateSpec spec;
  spec.id = "cert-g2";
  spec.binding = CertBinding::g2;
  spec.f_terms = {
      {kr(1, 3) * (k - kc(1)) * k, kOne, 1, 0},
      {kr(-1, 3) * (k - kc(1)) * (k + kc(1)), kOne, 0, 1},
  };
  spec.summand_coeff_k = kc(4) * k * k + kc(2) * k - kc(1);
  spec.summand_x = kOne;
  return spec;
}

CertificateSpec build_f4() {
  const RatPoly k = kvar();
  const RatPoly half_kk1 = kr(1, 2) * k * (k + kc(1));
  CertificateSpec spec;
  spec.id = "cert-f4";
  spec.binding = CertBinding::f4;
  spec.f_terms = {
      {half_kk1 * (k + kc(4)) * (k - kc(1)), kOne, 0, 0},
      {kr(-1, 2) * k * (k + kc(1)) * (k * k + kc(7) * k + kc(4)), kOnePlus2x, 1, 0},
      {kr(-1, 2) * k * (k + kc(1)) * (k + kc(2)) * (k - kc(1)), kOnePlus2x, 0, 1},
      {half_kk1 * (k + kc(2)) * (k + kc(3)), kOne, 1, 1},
  };
  spec.summand_coeff_k = kc(-4) * k * (k + kc(1)) * (k + kc(2));
  spec.summand_x = kXSquaredPlusX;
  return spec;
}

std::string param(long v) { return std::to_string(v); }

}  // namespace

const CertificateSpec& certificate_f2() {
  static const CertificateSpec spec = build_f2();
  return spec;
}

const CertificateSpec& certificate_g2() {
  static const CertificateSpec spec = build_g2();
  return spec;
}

const CertificateSpec& certificate_f4() {
  static const CertificateSpec spec = build_f4();
  return spec;
}

const std::vector<CertificateSpec>& shipped_certificates() {
  static const std::vector<CertificateSpec> all = {certificate_f2(),
                                                   certificate_g2(),
                                                   certificate_f4()};
  return all;
}

const CertificateSpec* find_certificate(const std::string& id) {
  for (const CertificateSpec& spec : shipped_certificates()) {
    if (spec.id == id) return &spec;
  }
  return nullptr;
}

CertificateSpec corrupt_certificate(CertificateSpec spec) {
  spec.f_terms.front().coeff_k = Rational(2) * spec.f_terms.front().coeff_k;
  return spec;
}

CertEvaluator::CertEvaluator(const CertificateSpec& spec, const CertTables& tables,
                             long n, int s0_convention)
    : spec_(spec), tables_(tables), n_(n), s0_(s0_convention) {
  switch (spec_.binding) {
    case CertBinding::f2:
      if (!tables_.delannoy) throw std::logic_error("f2 needs the Delannoy table");
      break;
    case CertBinding::g2:
      if (!tables_.delannoy || !tables_.little_schroder)
        throw std::logic_error("g2 needs the Delannoy and little Schroeder tables");
      break;
    case CertBinding::f4:
      if (!tables_.schroder_polys)
        throw std::logic_error("f4 needs the little Schroeder polynomials");
      break;
  }
}

RatPoly CertEvaluator::a(long k) const {
  switch (spec_.binding) {
    case CertBinding::f2: {
      Rational sign = ((n_ + k) % 2 == 0) ? 1 : -1;
      return RatPoly::constant(sign * Rational(tables_.delannoy->at(k)));
    }
    case CertBinding::g2:
      return RatPoly::constant(Rational(tables_.delannoy->at(k - 1)));
    case CertBinding::f4: {
      if (k == 0) return s0_ == 0 ? RatPoly{} : RatPoly{Rational(s0_)};
      return to_rational(tables_.schroder_polys->at(static_cast<size_t>(k)));
    }
  }
  throw std::logic_error("unknown certificate binding");
}

RatPoly CertEvaluator::b(long k) const {
  switch (spec_.binding) {
    case CertBinding::f2:
      return RatPoly::constant(Rational(tables_.delannoy->at(k - 1)));
    case CertBinding::g2: {
      Rational sign = ((n_ + k) % 2 == 0) ? 1 : -1;
      BigInt sk = k == 0 ? BigInt(s0_) : tables_.little_schroder->at(k);
      return RatPoly::constant(sign * Rational(sk));
    }
    case CertBinding::f4:
      return to_rational(tables_.schroder_polys->at(static_cast<size_t>(k) + 1));
  }
  throw std::logic_error("unknown certificate binding");
}

RatPoly CertEvaluator::certificate(long k) const {
  RatPoly total;
  for (const CertTerm& term : spec_.f_terms) {
    Rational coeff = term.coeff_k.eval(Rational(k));
    if (coeff == 0) continue;  // keeps D_{-1} out of F(1)
    RatPoly product = a(k - 1 + term.a_off) * b(k - 1 + term.b_off);
    total += coeff * (to_rational(term.x_factor) * product);
  }
  return total;
}

RatPoly CertEvaluator::summand(long k) const {
  Rational coeff = spec_.summand_coeff_k.eval(Rational(k));
  return coeff * (to_rational(spec_.summand_x) * (a(k) * b(k)));
}

namespace {

// Integer value of a rational polynomial known to be a constant integer;
// used for the integer certificates' partial sums.
bool constant_integer(const RatPoly& p, BigInt& out) {
  if (p.is_zero()) {
    out = 0;
    return true;
  }
  if (p.degree() != 0 || p.coeffs()[0].get_den() != 1) return false;
  out = p.coeffs()[0].get_num();
  return true;
}

void check_f2_closed_forms(const CertEvaluator& ev, const SequenceTable& d, long n,
                           const RatPoly& sum, VerificationReport& rep) {
  // Four-term partial-sum form evaluated at n.
  const Rational nn(n);
  RatPoly closed = make_rational(1, 72) * nn * (ev.a(n) * ev.b(n)) -
                   make_rational(1, 12) * (nn * (nn + 1)) * (ev.a(n + 1) * ev.b(n)) +
                   make_rational(1, 24) * (2 * nn * nn + 2 * nn + 1) *
                       (ev.a(n) * ev.b(n + 1)) +
                   make_rational(1, 72) * (nn + 1) * (ev.a(n + 1) * ev.b(n + 1));
  if (sum != closed) {
    rep.fail({{{"n", param(n)}, {"form", "partial-sum"}},
              sum.to_string(),
              closed.to_string()});
    return;
  }
  // Delannoy-only closed form: sum = (n+1)(3(n+1)Dn^2+(8+18n)DnDn1-3(n+1)Dn1^2)/36.
  BigInt sum_int;
  if (!constant_integer(sum, sum_int)) {
    rep.fail({{{"n", param(n)}}, sum.to_string(), "an integer"});
    return;
  }
  const BigInt& dn = d.at(n);
  const BigInt& dn1 = d.at(n + 1);
  BigInt total = (n + 1) * (3 * (n + 1) * dn * dn + (8 + 18 * n) * dn1 * dn -
                            3 * (n + 1) * dn1 * dn1);
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), BigInt(36).get_mpz_t());
  if (r != 0 || q != sum_int) {
    rep.fail({{{"n", param(n)}, {"form", "delannoy-closed"}},
              sum_int.get_str(),
              total.get_str() + "/36"});
  }
}

void check_g2_closed_forms(const CertEvaluator& ev, const SequenceTable& d,
                           const SequenceTable& s, long n, const RatPoly& sum,
                           VerificationReport& rep) {
  const Rational nn(n);
  RatPoly closed = make_rational(1, 3) * nn *
                   ((nn + 1) * (ev.a(n + 1) * ev.b(n)) -
                    (nn + 2) * (ev.a(n) * ev.b(n + 1)));
  if (sum != closed) {
    rep.fail({{{"n", param(n)}, {"form", "partial-sum"}},
              sum.to_string(),
              closed.to_string()});
    return;
  }
  // sum / n = ((n+1) D_n s_n + (n+2) D_{n-1} s_{n+1}) / 3, both divisions exact.
  BigInt sum_int;
  if (!constant_integer(sum, sum_int)) {
    rep.fail({{{"n", param(n)}}, sum.to_string(), "an integer"});
    return;
  }
  BigInt rhs_num = (n + 1) * d.at(n) * s.at(n) + (n + 2) * d.at(n - 1) * s.at(n + 1);
  BigInt q1, r1, q2, r2;
  mpz_tdiv_qr(q1.get_mpz_t(), r1.get_mpz_t(), sum_int.get_mpz_t(),
              BigInt(n).get_mpz_t());
  mpz_tdiv_qr(q2.get_mpz_t(), r2.get_mpz_t(), rhs_num.get_mpz_t(),
              BigInt(3).get_mpz_t());
  if (r1 != 0 || r2 != 0 || q1 != q2) {
    rep.fail({{{"n", param(n)}, {"form", "delannoy-schroder-closed"}},
              sum_int.get_str() + "/" + param(n),
              rhs_num.get_str() + "/3"});
  }
}

void check_f4_closed_forms(const std::vector<IntPoly>& sp, long n,
                           const RatPoly& sum, VerificationReport& rep) {
  // sum telescopes -4 (x^2+x) k(k+1)(k+2) s_k s_{k+1}; recover the plain
  // weighted sum S = sum / -4.
  RatPoly weighted = make_rational(-1, 4) * sum;
  const IntPoly& sn = sp[static_cast<size_t>(n)];
  const IntPoly& sn1 = sp[static_cast<size_t>(n) + 1];
  const IntPoly& sn2 = sp[static_cast<size_t>(n) + 2];
  const BigInt nn(n);
  const IntPoly u = kOnePlus2x;

  IntPoly rhs42 = sn1 * ((nn * nn + 7 * nn + 12) * sn2 -
                         (nn * nn + 9 * nn + 12) * (u * sn1)) +
                  nn * (sn * ((nn + 5) * sn1 - (nn + 3) * (u * sn2)));
  RatPoly lhs42 = make_rational(4, (n + 1) * (n + 2)) * weighted;
  if (lhs42 != make_rational(-1, 2) * to_rational(rhs42)) {
    rep.fail({{{"n", param(n)}, {"form", "closed-42"}},
              lhs42.to_string(),
              (make_rational(-1, 2) * to_rational(rhs42)).to_string()});
    return;
  }

  RatPoly lhs43 = make_rational(4, n * (n + 1) * (n + 2)) * weighted;
  IntPoly rhs43 = (nn + 3) * (sn2 * (sn1 - u * sn)) +
                  (nn + 1) * (sn1 * (sn - u * sn1));
  if (lhs43 != make_rational(-1, 2) * to_rational(rhs43)) {
    rep.fail({{{"n", param(n)}, {"form", "closed-43"}},
              lhs43.to_string(),
              (make_rational(-1, 2) * to_rational(rhs43)).to_string()});
    return;
  }

  IntPoly rhs44 = (nn + 2) * (u * (sn1 * sn1)) + sn * sn1 -
                  (2 * nn + 3) * ((u * u) * (sn * sn1)) + nn * (u * (sn * sn));
  if (lhs43 != make_rational(-1, 2) * to_rational(rhs44)) {
    rep.fail({{{"n", param(n)}, {"form", "closed-44"}},
              lhs43.to_string(),
              (make_rational(-1, 2) * to_rational(rhs44)).to_string()});
  }
}

}  // namespace

VerificationReport check_certificate(const CertificateSpec& spec, long n) {
  if (n < 1) throw std::invalid_argument("check_certificate: n must be >= 1");
  CertTables tables;
  SequenceTable d = delannoy_table(n + 1);
  SequenceTable s = little_schroder_table(n + 1);
  std::vector<IntPoly> sp;
  tables.delannoy = &d;
  tables.little_schroder = &s;
  if (spec.binding == CertBinding::f4) {
    sp = little_schroder_poly_table(n + 2);
    tables.schroder_polys = &sp;
  }
  return check_certificate(spec, n, tables);
}

VerificationReport check_certificate(const CertificateSpec& spec, long n,
                                     const CertTables& tables) {
  if (n < 1) throw std::invalid_argument("check_certificate: n must be >= 1");
  Stopwatch sw;
  VerificationReport rep;
  rep.claim_id = spec.id;
  rep.range = "1<=k<=n at n=" + std::to_string(n);

  CertEvaluator ev(spec, tables, n);

  // F(1) = 0, before anything telescopes.
  RatPoly f_prev = ev.certificate(1);
  if (!f_prev.is_zero()) {
    rep.fail({{{"n", param(n)}, {"k", "1"}}, "F(1)=" + f_prev.to_string(), "0"});
    rep.elapsed_ms = sw.ms();
    return rep;
  }
  if (spec.binding == CertBinding::f2) {
    // Boundary identity behind F(1) = 0: the b_0-free combination 3 a_0 + a_1.
    RatPoly boundary = Rational(3) * ev.a(0) + ev.a(1);
    if (!boundary.is_zero()) {
      rep.fail({{{"n", param(n)}, {"k", "1"}},
                "3*a(0)+a(1)=" + boundary.to_string(),
                "0"});
      rep.elapsed_ms = sw.ms();
      return rep;
    }
  }
  if (spec.binding == CertBinding::f4) {
    // F(1) must not depend on the s_0(x) convention; evaluate with both.
    for (int s0 : {1, 0}) {
      CertEvaluator boundary_ev(spec, tables, n, s0);
      RatPoly f1 = boundary_ev.certificate(1);
      if (!f1.is_zero()) {
        rep.fail({{{"n", param(n)}, {"k", "1"}, {"s0", param(s0)}},
                  "F(1)=" + f1.to_string(),
                  "0"});
        rep.elapsed_ms = sw.ms();
        return rep;
      }
    }
  }

  RatPoly sum;
  for (long k = 1; k <= n; ++k) {
    RatPoly f_next = ev.certificate(k + 1);
    RatPoly lhs = ev.summand(k);
    RatPoly rhs = f_next - f_prev;
    ++rep.instances_checked;
    if (lhs != rhs) {
      rep.fail({{{"n", param(n)}, {"k", param(k)}},
                lhs.to_string(),
                rhs.to_string()});
      rep.elapsed_ms = sw.ms();
      return rep;
    }
    sum += lhs;
    f_prev = std::move(f_next);
  }

  // The accumulated sum must equal F(n+1) - F(1) = F(n+1).
  if (sum != f_prev) {
    rep.fail({{{"n", param(n)}, {"form", "telescoped-sum"}},
              sum.to_string(),
              f_prev.to_string()});
    rep.elapsed_ms = sw.ms();
    return rep;
  }

  switch (spec.binding) {
    case CertBinding::f2:
      check_f2_closed_forms(ev, *tables.delannoy, n, sum, rep);
      break;
    case CertBinding::g2:
      check_g2_closed_forms(ev, *tables.delannoy, *tables.little_schroder, n, sum,
                            rep);
      break;
    case CertBinding::f4:
      check_f4_closed_forms(*tables.schroder_polys, n, sum, rep);
      break;
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace delsch
