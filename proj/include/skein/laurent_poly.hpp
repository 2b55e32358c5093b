#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace skein {

using Rational = mpq_class;

struct Exponent {
  int q = 0;
  int z = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  // Term order: by z-degree, then q-degree.
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    return a.q <=> b.q;
  }
};

// Exact Laurent polynomial in q and z with rational coefficients.
// Terms are kept sorted ascending by Exponent with no zero coefficients, so
// equality of values is equality of term vectors.
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    Rational coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integers promote naturally
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(const Rational& c, int q_exp, int z_exp);
  static LaurentPoly q(int e = 1) { return monomial(1, e, 0); }
  static LaurentPoly z(int e = 1) { return monomial(1, 0, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Coefficient at an exponent (zero when absent).
  Rational coeff(int q_exp, int z_exp) const;

  // Leading term under the term order (largest exponent). Requires nonzero.
  const Term& leading() const { return terms_.back(); }

  Exponent min_exponents() const;  // componentwise minimum; (0,0) for zero
  Exponent max_exponents() const;  // componentwise maximum; (0,0) for zero
  int total_degree_span() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  // Multiply by q^dq z^dz.
  LaurentPoly shifted(int dq, int dz) const;

  // Non-negative powers for any polynomial; negative powers for monomials only.
  LaurentPoly pow(int e) const;

  // Exact quotient by a monomial. Throws DomainError on zero divisor or
  // non-monomial divisor.
  LaurentPoly divided_by_monomial(const LaurentPoly& m) const;

  Rational evaluate(const Rational& q0, const Rational& z0) const;

  std::string str() const;          // "q^2 - q + 1"
  std::string compact_str() const;  // "q^2-q+1"
  // compact_str() wrapped in parentheses when there is more than one term.
  std::string factor_str() const;
  // Monomial content pulled out of the sum: "q*(q-1)", "-(q-1)*z", "2*q^2".
  std::string factored_str() const;

  std::size_t hash() const;

  static LaurentPoly parse(std::string_view text);

 private:
  void normalize();
  std::string str_impl(bool compact) const;
  std::vector<Term> terms_;
};

std::string rational_str(const Rational& r);

}  // namespace skein
