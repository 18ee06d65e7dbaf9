#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "delsch/bigint.hpp"
#include "delsch/errors.hpp"

namespace delsch {

// Dense univariate polynomial, coefficients ascending by degree. No trailing
// zero coefficient is ever stored and the zero polynomial is the empty list,
// so equality is plain coefficient-wise comparison. Values are immutable in
// spirit: every operation returns a fresh normalized polynomial.
template <class Coeff>
class DensePoly {
 public:
  DensePoly() = default;
  DensePoly(std::initializer_list<Coeff> cs) : c_(cs) { strip(); }
  explicit DensePoly(std::vector<Coeff> cs) : c_(std::move(cs)) { strip(); }

  static DensePoly constant(Coeff a) {
    DensePoly p;
    if (a != 0) p.c_.push_back(std::move(a));
    return p;
  }

  static DensePoly monomial(Coeff a, std::size_t deg) {
    DensePoly p;
    if (a != 0) {
      p.c_.assign(deg + 1, Coeff(0));
      p.c_[deg] = std::move(a);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }  // pre: !is_zero()
  const std::vector<Coeff>& coeffs() const { return c_; }

  bool operator==(const DensePoly&) const = default;

  DensePoly operator-() const {
    DensePoly r = *this;
    for (Coeff& c : r.c_) c = -c;
    return r;
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    DensePoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.strip();
    return r;
  }

  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    return a + (-b);
  }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    DensePoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.strip();
    return r;
  }

  friend DensePoly operator*(const Coeff& s, const DensePoly& p) {
    if (s == 0) return {};
    DensePoly r = p;
    for (Coeff& c : r.c_) c *= s;
    return r;
  }
  friend DensePoly operator*(const DensePoly& p, const Coeff& s) { return s * p; }

  DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
  DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  DensePoly pow(unsigned long e) const {
    DensePoly result = constant(Coeff(1));
    DensePoly base = *this;
    while (e > 0) {
      if (e & 1UL) result *= base;
      e >>= 1UL;
      if (e > 0) base *= base;
    }
    return result;
  }

  Coeff eval(const Coeff& x) const {
    Coeff acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Ascending comma-separated coefficient list, e.g. "1,5,5"; zero is "0".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i > 0) out += ',';
      out += c_[i].get_str();
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const DensePoly& p) {
    return os << p.to_string();
  }

 private:
  void strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = DensePoly<BigInt>;
using RatPoly = DensePoly<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> cs;
  cs.reserve(p.coeffs().size());
  for (const BigInt& c : p.coeffs()) cs.emplace_back(c);
  return RatPoly(std::move(cs));
}

inline bool is_integral(const RatPoly& p) {
  for (const Rational& c : p.coeffs()) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

// Converts a rational polynomial known to have integer coefficients;
// throws std::logic_error if one does not.
inline IntPoly to_integral(const RatPoly& p) {
  std::vector<BigInt> cs;
  cs.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) {
    if (c.get_den() != 1)
      throw std::logic_error("to_integral: non-integer coefficient " + c.get_str());
    cs.push_back(c.get_num());
  }
  return IntPoly(std::move(cs));
}

struct RatDivMod {
  RatPoly quotient;
  RatPoly remainder;
};

// Classical long division in Q[x]. Requires den != 0; guarantees
// num = quotient * den + remainder with deg(remainder) < deg(den).
inline RatDivMod divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("divmod: zero divisor");
  RatDivMod out;
  out.remainder = num;
  const long dd = den.degree();
  std::vector<Rational> q;
  if (num.degree() >= dd) q.assign(static_cast<std::size_t>(num.degree() - dd) + 1, Rational(0));
  while (!out.remainder.is_zero() && out.remainder.degree() >= dd) {
    const long shift = out.remainder.degree() - dd;
    Rational c = out.remainder.leading() / den.leading();
    q[static_cast<std::size_t>(shift)] = c;
    out.remainder -= RatPoly::monomial(std::move(c), static_cast<std::size_t>(shift)) * den;
  }
  out.quotient = RatPoly(std::move(q));
  return out;
}

// Division in Z[x] by way of Q[x]. `not_divisible` means a nonzero
// remainder; `not_integral` means the quotient exists in Q[x] but has a
// non-integer coefficient. The two outcomes are reported separately because
// the claims this library checks assert both properties.
struct ExactDivOutcome {
  enum class Status { ok, not_divisible, not_integral };
  Status status = Status::ok;
  IntPoly quotient;           // set when ok
  RatPoly rational_quotient;  // set when ok or not_integral
  RatPoly remainder;          // nonzero exactly when not_divisible
  long first_bad_degree = -1; // lowest non-integer coefficient when not_integral
};

inline ExactDivOutcome exact_div(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  ExactDivOutcome out;
  RatDivMod dm = divmod(to_rational(num), to_rational(den));
  out.rational_quotient = dm.quotient;
  if (!dm.remainder.is_zero()) {
    out.status = ExactDivOutcome::Status::not_divisible;
    out.remainder = std::move(dm.remainder);
    return out;
  }
  for (std::size_t i = 0; i < dm.quotient.coeffs().size(); ++i) {
    if (dm.quotient.coeffs()[i].get_den() != 1) {
      out.status = ExactDivOutcome::Status::not_integral;
      out.first_bad_degree = static_cast<long>(i);
      return out;
    }
  }
  out.quotient = to_integral(dm.quotient);
  return out;
}

inline IntPoly exact_div_or_throw(const IntPoly& num, const IntPoly& den,
                                  const char* what) {
  ExactDivOutcome out = exact_div(num, den);
  if (out.status != ExactDivOutcome::Status::ok)
    throw InexactDivision(std::string(what) + ": quotient not in Z[x]");
  return std::move(out.quotient);
}

// Coefficient-wise exact division of an integer polynomial by an integer.
inline IntPoly div_exact(const IntPoly& p, const BigInt& s, const char* what) {
  std::vector<BigInt> cs;
  cs.reserve(p.coeffs().size());
  for (const BigInt& c : p.coeffs()) cs.push_back(div_exact(c, s, what));
  return IntPoly(std::move(cs));
}

}  // namespace delsch
