#pragma once

#include <string>
#include <string_view>

#include "skein/laurent_poly.hpp"

namespace skein {

// Element of Q(q, z) in lowest terms.
//
// The denominator is an ordinary polynomial with no monomial factor and a
// leading coefficient of 1; monomial factors of the denominator are carried
// by the numerator as negative exponents. gcd(numerator, denominator) = 1.
class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(long c) : num_(c) {}  // NOLINT
  RationalFn(const LaurentPoly& p) : num_(p) {}  // NOLINT
  RationalFn(const Rational& c) : num_(c) {}  // NOLINT
  RationalFn(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_constant(); }
  bool is_monomial() const { return is_laurent() && num_.is_monomial(); }
  // Ordinary-degree measure used for pivot selection.
  int complexity() const;

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);
  RationalFn operator-() const;
  RationalFn inverse() const;

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFn pow(int e) const;
  Rational evaluate(const Rational& q0, const Rational& z0) const;

  // "(z - q + 1)/(q*z)"; compact form drops the spaces around + and -.
  std::string str() const;
  std::string compact_str() const;

  static RationalFn parse(std::string_view text);

 private:
  void canonicalize();
  std::string str_impl(bool compact) const;

  LaurentPoly num_;
  LaurentPoly den_{1L};
};

// Polynomial GCD over Q of two Laurent polynomials, treated as polynomials
// after clearing monomial factors. The result is a polynomial with no
// monomial factor and leading coefficient 1 (or 0 when both inputs are 0).
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient a / b of Laurent polynomials. Throws DomainError when b does
// not divide a.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace skein
