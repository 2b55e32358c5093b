#include "skein/laurent_poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

std::string rational_str(const Rational& r) { return r.get_str(); }

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({{0, 0}, Rational(c)});
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int q_exp, int z_exp) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({{q_exp, z_exp}, c});
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
}

Rational LaurentPoly::coeff(int q_exp, int z_exp) const {
  Exponent e{q_exp, z_exp};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

Exponent LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Exponent m = terms_[0].exp;
  for (const auto& t : terms_) {
    m.q = std::min(m.q, t.exp.q);
    m.z = std::min(m.z, t.exp.z);
  }
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  if (terms_.empty()) return {};
  Exponent m = terms_[0].exp;
  for (const auto& t : terms_) {
    m.q = std::max(m.q, t.exp.q);
    m.z = std::max(m.z, t.exp.z);
  }
  return m;
}

int LaurentPoly::total_degree_span() const {
  auto lo = min_exponents();
  auto hi = max_exponents();
  return (hi.q - lo.q) + (hi.z - lo.z);
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exp, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_monomial()) {
    r = b.shifted(a.terms_[0].exp.q, a.terms_[0].exp.z);
    return r *= a.terms_[0].coeff;
  }
  if (b.is_monomial()) {
    r = a.shifted(b.terms_[0].exp.q, b.terms_[0].exp.z);
    return r *= b.terms_[0].coeff;
  }
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      r.terms_.push_back({{x.exp.q + y.exp.q, x.exp.z + y.exp.z}, x.coeff * y.coeff});
    }
  }
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

LaurentPoly LaurentPoly::shifted(int dq, int dz) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    t.exp.q += dq;
    t.exp.z += dz;
  }
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw DomainError("negative power of a non-monomial Laurent polynomial");
    const auto& t = terms_[0];
    Rational c = 1;
    Rational inv = 1 / t.coeff;
    for (int i = 0; i < -e; ++i) c *= inv;
    return monomial(c, t.exp.q * e, t.exp.z * e);
  }
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::divided_by_monomial(const LaurentPoly& m) const {
  if (m.is_zero()) throw DomainError("division by zero");
  if (!m.is_monomial()) throw DomainError("divisor is not a monomial");
  const auto& t = m.terms_[0];
  LaurentPoly r = shifted(-t.exp.q, -t.exp.z);
  return r *= Rational(1 / t.coeff);
}

namespace {

Rational rational_pow(const Rational& x, int e) {
  Rational base = e < 0 ? Rational(1 / x) : x;
  unsigned n = e < 0 ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
  Rational r = 1;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return r;
}

}  // namespace

Rational LaurentPoly::evaluate(const Rational& q0, const Rational& z0) const {
  bool needs_q = false;
  bool needs_z = false;
  for (const auto& t : terms_) {
    needs_q |= t.exp.q < 0;
    needs_z |= t.exp.z < 0;
  }
  if (needs_q && q0 == 0) throw DomainError("evaluation at q = 0 of a negative power of q");
  if (needs_z && z0 == 0) throw DomainError("evaluation at z = 0 of a negative power of z");
  Rational sum = 0;
  for (const auto& t : terms_) sum += t.coeff * rational_pow(q0, t.exp.q) * rational_pow(z0, t.exp.z);
  return sum;
}

namespace {

void append_var(std::string& out, char var, int e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  if (e != 1) out += '^' + std::to_string(e);
}

// Unsigned rendering of |c| * q^a z^b.
std::string monomial_body(const Rational& abs_c, const Exponent& e) {
  std::string vars;
  append_var(vars, 'q', e.q);
  append_var(vars, 'z', e.z);
  if (vars.empty()) return abs_c.get_str();
  if (abs_c == 1) return vars;
  return abs_c.get_str() + "*" + vars;
}

}  // namespace

std::string LaurentPoly::str() const { return str_impl(false); }
std::string LaurentPoly::compact_str() const { return str_impl(true); }

std::string LaurentPoly::str_impl(bool compact) const {
  if (terms_.empty()) return "0";
  std::string out;
  const std::string plus = compact ? "+" : " + ";
  const std::string minus = compact ? "-" : " - ";
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    bool neg = it->coeff < 0;
    std::string body = monomial_body(abs(it->coeff), it->exp);
    if (first) {
      out += neg ? "-" + body : body;
    } else {
      out += (neg ? minus : plus) + body;
    }
    first = false;
  }
  return out;
}

std::string LaurentPoly::factor_str() const {
  if (terms_.size() <= 1) return compact_str();
  return "(" + compact_str() + ")";
}

std::string LaurentPoly::factored_str() const {
  if (terms_.size() <= 1) return compact_str();
  Exponent lo = min_exponents();
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    num_gcd = gcd(num_gcd, t.coeff.get_num());
    den_lcm = lcm(den_lcm, t.coeff.get_den());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading().coeff < 0) content = -content;
  LaurentPoly rest = shifted(-lo.q, -lo.z);
  rest *= Rational(1 / content);
  std::string out;
  std::string prefix = monomial(content, lo.q, 0).compact_str();
  if (prefix == "-1") {
    out = "-";
  } else if (prefix != "1") {
    out = prefix + "*";
  }
  out += "(" + rest.compact_str() + ")";
  if (lo.z != 0) out += "*" + monomial(1, 0, lo.z).compact_str();
  return out;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    std::size_t x = std::hash<int>()(t.exp.q) * 31 + std::hash<int>()(t.exp.z);
    std::size_t c = mpz_getlimbn(t.coeff.get_num_mpz_t(), 0) * 131 +
                    mpz_getlimbn(t.coeff.get_den_mpz_t(), 0) + (t.coeff < 0 ? 7 : 0);
    x ^= c + 0x9e3779b97f4a7c15ULL + (x << 6);
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace skein
