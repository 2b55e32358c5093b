#pragma once

#include <map>
#include <string>

#include "skein/rational_fn.hpp"
#include "skein/trace.hpp"

namespace skein {

// Linear combination of s-monomials over Q(q, z).
class LinearForm {
 public:
  using Terms = std::map<SMonomial, RationalFn>;

  LinearForm() = default;
  explicit LinearForm(const TraceValue& t);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFn coeff(const SMonomial& m) const;

  void add_term(const SMonomial& m, const RationalFn& c);
  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const RationalFn& c);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const RationalFn& c) { return a *= c; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  std::map<SMonomial, Rational> evaluate(const Rational& q0, const Rational& z0) const;

  std::string str() const;

 private:
  Terms terms_;
};

// Renders a rational coefficient the way trace coefficients are rendered.
std::string coefficient_str(const RationalFn& c);

}  // namespace skein
