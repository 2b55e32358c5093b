#include "skein/rational_fn.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "skein/error.hpp"

namespace skein {

namespace {

// Dense univariate polynomial in q over Z, coefficients low degree first.
using UPoly = std::vector<mpz_class>;
// Dense polynomial in z whose coefficients are UPolys, low degree first.
using ZPoly = std::vector<UPoly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(ZPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

mpz_class int_content(const UPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

// Primitive over Z with positive leading coefficient.
UPoly primitive(UPoly p) {
  if (p.empty()) return p;
  mpz_class g = int_content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

// Pseudo-remainder in Z[q].
UPoly uprem(UPoly a, const UPoly& b) {
  const mpz_class& lc = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    int shift = deg(a) - deg(b);
    mpz_class lead = a.back();
    for (auto& c : a) c *= lc;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= lead * b[j];
    trim(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  mpz_class c = gcd(int_content(a), int_content(b));
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) {
      a = UPoly{1};
      break;
    }
    UPoly r = primitive(uprem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& x : a) x *= c;
  return a;
}

// Exact division in Z[q]; returns false when b does not divide a.
bool udivide(UPoly a, const UPoly& b, UPoly& quot) {
  quot.assign(deg(a) >= deg(b) ? a.size() - b.size() + 1 : 0, mpz_class(0));
  while (!a.empty()) {
    if (deg(a) < deg(b)) return false;
    int shift = deg(a) - deg(b);
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class c = a.back() / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
    quot[shift] = c;
    trim(a);
  }
  trim(quot);
  return true;
}

UPoly content(const ZPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? primitive(c) : ugcd(g, c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  // Sign convention: positive leading coefficient of the leading z-coefficient.
  if (!g.empty() && !p.empty() && p.back().back() < 0) {
    for (auto& x : g) x = -x;
  }
  return g;
}

ZPoly divide_by_upoly(const ZPoly& p, const UPoly& c) {
  ZPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) continue;
    if (!udivide(p[i], c, r[i])) throw DomainError("inexact polynomial division");
  }
  return r;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.empty()) return p;
  return divide_by_upoly(p, content(p));
}

// Pseudo-remainder of a by b with respect to z.
ZPoly prem(ZPoly a, const ZPoly& b) {
  const UPoly& lc = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    int shift = deg(a) - deg(b);
    UPoly lead = a.back();
    for (auto& c : a) c = mul(c, lc);
    for (std::size_t j = 0; j < b.size(); ++j) {
      UPoly t = mul(lead, b[j]);
      UPoly& dst = a[j + shift];
      if (dst.size() < t.size()) dst.resize(t.size());
      for (std::size_t k = 0; k < t.size(); ++k) dst[k] -= t[k];
      trim(dst);
    }
    trim(a);
  }
  return a;
}

ZPoly scale(const ZPoly& p, const UPoly& c) {
  ZPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = mul(p[i], c);
  trim(r);
  return r;
}

mpz_class eval_at(const UPoly& p, const mpz_class& x) {
  mpz_class r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

// Specialises q := q0, giving a polynomial in z.
UPoly specialise_q(const ZPoly& p, const mpz_class& q0) {
  UPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = eval_at(p[i], q0);
  trim(r);
  return r;
}

ZPoly transpose(const ZPoly& p) {
  ZPoly r;
  for (std::size_t zi = 0; zi < p.size(); ++zi) {
    for (std::size_t qi = 0; qi < p[zi].size(); ++qi) {
      if (p[zi][qi] == 0) continue;
      if (r.size() <= qi) r.resize(qi + 1);
      if (r[qi].size() <= zi) r[qi].resize(zi + 1);
      r[qi][zi] = p[zi][qi];
    }
  }
  return r;
}

// Sufficient test for gcd(a, b) = 1: a common factor of positive z-degree
// survives specialisation at a point where both leading coefficients are
// nonzero.
bool coprime_in_z(const ZPoly& a, const ZPoly& b) {
  if (deg(a) == 0 || deg(b) == 0) return true;
  for (long q0 = 2; q0 < 40; ++q0) {
    mpz_class x = q0 % 2 == 0 ? mpz_class(q0 / 2 + 1) : mpz_class(-(q0 / 2) - 1);
    UPoly sa = specialise_q(a, x);
    UPoly sb = specialise_q(b, x);
    if (deg(sa) != deg(a) || deg(sb) != deg(b)) continue;
    return deg(ugcd(sa, sb)) == 0;
  }
  return false;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (coprime_in_z(a, b) && coprime_in_z(transpose(a), transpose(b))) return ZPoly{UPoly{1}};
  UPoly c = ugcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) {
      a = ZPoly{UPoly{1}};
      break;
    }
    ZPoly r = prem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return scale(primitive_part(a), c);
}

// Converts p / (q^lo.q z^lo.z) to dense integral form; *factor receives the
// rational multiplier that was cleared.
ZPoly to_dense(const LaurentPoly& p, Exponent lo, Rational* factor = nullptr) {
  mpz_class den = 1;
  for (const auto& t : p.terms()) den = lcm(den, t.coeff.get_den());
  ZPoly r;
  for (const auto& t : p.terms()) {
    std::size_t zi = t.exp.z - lo.z;
    std::size_t qi = t.exp.q - lo.q;
    if (r.size() <= zi) r.resize(zi + 1);
    if (r[zi].size() <= qi) r[zi].resize(qi + 1);
    r[zi][qi] = t.coeff.get_num() * (den / t.coeff.get_den());
  }
  if (factor) *factor = Rational(den);
  return r;
}

LaurentPoly from_dense(const ZPoly& p, Exponent shift, const Rational& factor = 1) {
  LaurentPoly r;
  for (std::size_t zi = 0; zi < p.size(); ++zi) {
    for (std::size_t qi = 0; qi < p[zi].size(); ++qi) {
      if (p[zi][qi] != 0) {
        r += LaurentPoly::monomial(Rational(p[zi][qi]) * factor, static_cast<int>(qi) + shift.q,
                                   static_cast<int>(zi) + shift.z);
      }
    }
  }
  return r;
}

}  // namespace

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  ZPoly g = zgcd(to_dense(a, a.min_exponents()), to_dense(b, b.min_exponents()));
  LaurentPoly r = from_dense(g, {});
  if (r.is_zero()) return r;
  r = r.divided_by_monomial(LaurentPoly::monomial(1, r.min_exponents().q, r.min_exponents().z));
  r *= Rational(1 / r.leading().coeff);
  return r;
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_zero()) return {};
  if (b.is_monomial()) return a.divided_by_monomial(b);
  Exponent la = a.min_exponents();
  Exponent lb = b.min_exponents();
  const auto& lead = b.leading();
  LaurentPoly quot;
  LaurentPoly rem = a;
  while (!rem.is_zero()) {
    const auto& r = rem.leading();
    int dq = r.exp.q - lead.exp.q;
    int dz = r.exp.z - lead.exp.z;
    if (dq < la.q - lb.q || dz < la.z - lb.z) throw DomainError("inexact polynomial division");
    LaurentPoly t = LaurentPoly::monomial(r.coeff / lead.coeff, dq, dz);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("division by zero");
  canonicalize();
}

void RationalFn::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
    return;
  }
  Exponent lo = den_.min_exponents();
  if (lo.q != 0 || lo.z != 0) {
    num_ = num_.shifted(-lo.q, -lo.z);
    den_ = den_.shifted(-lo.q, -lo.z);
  }
  if (!den_.is_constant()) {
    LaurentPoly g = polynomial_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  Rational lc = den_.leading().coeff;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

int RationalFn::complexity() const {
  return num_.total_degree_span() + den_.total_degree_span() +
         static_cast<int>(num_.size() + den_.size());
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  // Henrici: with g = gcd(d1, d2), only g can share factors with the new numerator.
  LaurentPoly g = polynomial_gcd(den_, o.den_);
  LaurentPoly d1 = exact_quotient(den_, g);
  LaurentPoly d2 = exact_quotient(o.den_, g);
  LaurentPoly n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = RationalFn();
  LaurentPoly d = d1 * d2;
  if (!g.is_constant()) {
    LaurentPoly h = polynomial_gcd(n, g);
    if (!h.is_constant()) {
      n = exact_quotient(n, h);
      g = exact_quotient(g, h);
    }
    d *= g;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  Rational lc = den_.leading().coeff;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFn();
  if (is_laurent() && o.is_laurent()) {
    num_ *= o.num_;
    return *this;
  }
  LaurentPoly n1 = num_;
  LaurentPoly n2 = o.num_;
  LaurentPoly d1 = den_;
  LaurentPoly d2 = o.den_;
  if (!d2.is_constant()) {
    LaurentPoly g = polynomial_gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = exact_quotient(n1, g);
      d2 = exact_quotient(d2, g);
    }
  }
  if (!d1.is_constant()) {
    LaurentPoly g = polynomial_gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = exact_quotient(n2, g);
      d1 = exact_quotient(d1, g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  canonicalize();
  return *this;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return RationalFn(den_, num_);
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFn r(1L);
  RationalFn base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

Rational RationalFn::evaluate(const Rational& q0, const Rational& z0) const {
  Rational d = den_.evaluate(q0, z0);
  if (d == 0) throw DomainError("evaluation at a pole");
  return num_.evaluate(q0, z0) / d;
}

namespace {

bool is_atom(const std::string& s) {
  return s.find_first_of("*/+- ") == std::string::npos;
}

}  // namespace

std::string RationalFn::str_impl(bool compact) const {
  // Move negative exponents of the numerator into the printed denominator.
  Exponent lo = num_.min_exponents();
  bool negative = lo.q < 0 || lo.z < 0;
  if (is_laurent() && (!negative || num_.size() == 1)) {
    return compact ? num_.compact_str() : num_.str();
  }
  int mq = std::min(lo.q, 0);
  int mz = std::min(lo.z, 0);
  LaurentPoly n = num_.shifted(-mq, -mz);
  LaurentPoly d = den_.shifted(-mq, -mz);
  std::string ns = compact ? n.compact_str() : n.str();
  std::string ds = compact ? d.compact_str() : d.str();
  if (!is_atom(ns)) ns = "(" + ns + ")";
  if (!is_atom(ds)) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

std::string RationalFn::str() const { return str_impl(false); }
std::string RationalFn::compact_str() const { return str_impl(true); }

}  // namespace skein
