#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "skein/hecke.hpp"

namespace skein {

// Commutative monomial s_{k_1} .. s_{k_r} in the loop unknowns; k_i != 0.
struct SMonomial {
  std::vector<int> factors;  // sorted ascending

  SMonomial() = default;
  explicit SMonomial(std::vector<int> ks);

  SMonomial times(int k) const;
  bool is_one() const { return factors.empty(); }
  std::string str() const;  // "s[1]*s[2]", "1" for the empty product

  friend bool operator==(const SMonomial&, const SMonomial&) = default;
  friend auto operator<=>(const SMonomial&, const SMonomial&) = default;
};

// Linear combination of s-monomials with Laurent coefficients.
class TraceValue {
 public:
  using Terms = std::map<SMonomial, LaurentPoly>;

  TraceValue() = default;
  static TraceValue monomial(const SMonomial& m, const LaurentPoly& c = LaurentPoly(1L));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const SMonomial& m) const;

  void add_term(const SMonomial& m, const LaurentPoly& c);
  TraceValue& operator+=(const TraceValue& o);
  TraceValue& operator-=(const TraceValue& o);
  TraceValue& operator*=(const LaurentPoly& c);
  friend TraceValue operator+(TraceValue a, const TraceValue& b) { return a += b; }
  friend TraceValue operator-(TraceValue a, const TraceValue& b) { return a -= b; }
  friend TraceValue operator*(TraceValue a, const LaurentPoly& c) { return a *= c; }
  friend bool operator==(const TraceValue&, const TraceValue&) = default;

  // Multiplies every monomial by s_k.
  TraceValue times_s(int k) const;

  std::string str() const;  // "q*s[1]*s[2] + (q-1)*z*s[3]"

 private:
  Terms terms_;
};

// Two ways of cycling the top braiding generator around when peeling off the
// top strand; they must agree (tr(ab) = tr(ba)).
enum class TraceStrategy { MoveTailLeft, KeepTailRight };

TraceValue markov_trace(const HeckeElement& x, TraceStrategy strategy = TraceStrategy::MoveTailLeft);
TraceValue markov_trace(const BraidWord& w, TraceStrategy strategy = TraceStrategy::MoveTailLeft);

// Shared "coeff*body" rendering used by trace values and linear forms.
std::string render_term(const std::string& coeff, const std::string& body);
void append_rendered(std::string& out, const std::string& term);

}  // namespace skein
