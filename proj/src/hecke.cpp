#include "skein/hecke.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "skein/error.hpp"

namespace skein {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  }
  return inv;
}

std::vector<int> reduced_word(const Perm& w) {
  Perm cur = w;
  std::vector<std::vector<int>> blocks;
  for (int m = static_cast<int>(cur.size()); m >= 2; --m) {
    int p = static_cast<int>(std::find(cur.begin(), cur.begin() + m, m - 1) - cur.begin());
    if (p != m - 1) {
      std::vector<int> block;
      for (int i = m - 1; i >= p + 1; --i) block.push_back(i);
      blocks.push_back(block);
      std::rotate(cur.begin() + p, cur.begin() + p + 1, cur.begin() + m);
    }
  }
  std::vector<int> word;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

BasisWord identity_basis_word(int n) { return {std::vector<int>(n, 0), identity_perm(n)}; }

BraidWord to_braid_word(const BasisWord& b, LoopVariant variant) {
  int n = b.strands();
  BraidWord w(n);
  for (int i = 0; i < n; ++i) {
    if (b.loops[i] != 0) w *= expand_loop(i, variant, b.loops[i], n);
  }
  for (int g : reduced_word(b.perm)) w.append({g, 1});
  return w;
}

std::string basis_word_str(const BasisWord& b, LoopVariant variant) {
  std::string out;
  const char* letter = variant == LoopVariant::T ? "t" : "u";
  for (int i = 0; i < b.strands(); ++i) {
    if (b.loops[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += i == 0 ? std::string("t") : letter + std::to_string(i);
    if (b.loops[i] != 1) out += "^" + std::to_string(b.loops[i]);
  }
  for (int g : reduced_word(b.perm)) {
    if (!out.empty()) out += ' ';
    out += "g" + std::to_string(g);
  }
  return out.empty() ? "1" : out;
}

HeckeElement HeckeElement::identity(int strands, LoopVariant variant) {
  HeckeElement e(strands, variant);
  e.add_term(identity_basis_word(strands), LaurentPoly(1L));
  return e;
}

HeckeElement HeckeElement::basis(const BasisWord& b, LoopVariant variant) {
  HeckeElement e(b.strands(), variant);
  e.add_term(b, LaurentPoly(1L));
  return e;
}

LaurentPoly HeckeElement::coeff(const BasisWord& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add_term(const BasisWord& b, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.strands_ != strands_ || o.variant_ != variant_) {
    throw ValidationError("adding elements of different algebras or bases");
  }
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.strands_ != strands_ || o.variant_ != variant_) {
    throw ValidationError("subtracting elements of different algebras or bases");
  }
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

HeckeElement HeckeElement::embedded(int m) const {
  if (m < strands_) throw ValidationError("cannot embed into fewer strands");
  HeckeElement r(m, variant_);
  for (const auto& [b, c] : terms_) {
    BasisWord e = b;
    e.loops.resize(m, 0);
    for (int i = strands_; i < m; ++i) e.perm.push_back(i);
    r.terms_.emplace(std::move(e), c);
  }
  return r;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    std::string word = basis_word_str(b, variant_);
    std::string coeff = c.factored_str();
    std::string term;
    if (word == "1") {
      term = coeff;
    } else if (coeff == "1") {
      term = word;
    } else if (coeff == "-1") {
      term = "-" + word;
    } else {
      term = coeff + "*" + word;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

namespace {

using Terms = HeckeElement::Terms;

const LaurentPoly& q_minus_1() {
  static const LaurentPoly v = LaurentPoly::q() - LaurentPoly(1L);
  return v;
}

void accumulate(Terms& out, BasisWord&& b, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(std::move(b), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// g_i T_w in the type-A Hecke algebra, added to out with the given loops.
void g_on_perm(int i, const std::vector<int>& loops, const Perm& w, const LaurentPoly& c, Terms& out) {
  auto lo = std::find(w.begin(), w.end(), i - 1);
  auto hi = std::find(w.begin(), w.end(), i);
  Perm swapped = w;
  std::swap(swapped[lo - w.begin()], swapped[hi - w.begin()]);
  if (lo < hi) {
    accumulate(out, BasisWord{loops, std::move(swapped)}, c);
  } else {
    accumulate(out, BasisWord{loops, w}, c * q_minus_1());
    accumulate(out, BasisWord{loops, std::move(swapped)}, c * LaurentPoly::q());
  }
}

// Laurent polynomial in the commuting pair x = t_{i-1}, y = t_i.
using XY = std::map<std::pair<int, int>, LaurentPoly>;

void add_xy(XY& p, int ex, int ey, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto& slot = p[{ex, ey}];
  slot += c;
  if (slot.is_zero()) p.erase({ex, ey});
}

XY times_monomial(const XY& p, const LaurentPoly& c, int ex, int ey) {
  XY r;
  for (const auto& [e, v] : p) add_xy(r, e.first + ex, e.second + ey, v * c);
  return r;
}

void add_into(XY& dst, const XY& src) {
  for (const auto& [e, v] : src) add_xy(dst, e.first, e.second, v);
}

// Moving g = g_i from the left of f(x, y) to the right gives
// g f = A(f) g + B(f) with A(x^a y^b) = q^{b-a} x^b y^a; B is a twisted
// derivation, B(fh) = A(f) B(h) + B(f) h, determined by
// B(x) = (q^-1 - 1) y and B(y) = (q - 1) y.
const XY& b_of_x_power(int a) {
  thread_local std::map<int, XY> memo;
  if (auto it = memo.find(a); it != memo.end()) return it->second;
  XY r;
  LaurentPoly q = LaurentPoly::q();
  LaurentPoly qinv = LaurentPoly::q(-1);
  if (a > 0) {
    r = times_monomial(b_of_x_power(a - 1), qinv, 0, 1);
    add_xy(r, a - 1, 1, qinv - LaurentPoly(1L));
  } else if (a < 0) {
    r = times_monomial(b_of_x_power(a + 1), q, 0, -1);
    add_xy(r, a, 0, q - LaurentPoly(1L));
  }
  return memo.emplace(a, std::move(r)).first->second;
}

const XY& b_of_y_power(int b) {
  thread_local std::map<int, XY> memo;
  if (auto it = memo.find(b); it != memo.end()) return it->second;
  XY r;
  LaurentPoly q = LaurentPoly::q();
  LaurentPoly qinv = LaurentPoly::q(-1);
  if (b > 0) {
    r = times_monomial(b_of_y_power(b - 1), q, 1, 0);
    add_xy(r, 0, b, q - LaurentPoly(1L));
  } else if (b < 0) {
    r = times_monomial(b_of_y_power(b + 1), qinv, -1, 0);
    add_xy(r, -1, b + 1, qinv - LaurentPoly(1L));
  }
  return memo.emplace(b, std::move(r)).first->second;
}

const XY& b_of_monomial(int a, int b) {
  thread_local std::map<std::pair<int, int>, XY> memo;
  if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
  // B(x^a y^b) = A(x^a) B(y^b) + B(x^a) y^b, A(x^a) = q^-a y^a.
  XY r = times_monomial(b_of_y_power(b), LaurentPoly::q(-a), 0, a);
  add_into(r, times_monomial(b_of_x_power(a), LaurentPoly(1L), 0, b));
  return memo.emplace(std::make_pair(a, b), std::move(r)).first->second;
}

void g_on_t_basis(int i, const BasisWord& bw, const LaurentPoly& c, Terms& out) {
  int a = bw.loops[i - 1];
  int b = bw.loops[i];
  std::vector<int> loops = bw.loops;
  loops[i - 1] = b;
  loops[i] = a;
  g_on_perm(i, loops, bw.perm, c * LaurentPoly::q(b - a), out);
  for (const auto& [e, v] : b_of_monomial(a, b)) {
    loops[i - 1] = e.first;
    loops[i] = e.second;
    accumulate(out, BasisWord{loops, bw.perm}, c * v);
  }
}

// Products g t^c t'^d in H_{1,2}, written as sums of t^c' t'^d' g^eps.
struct PrimeTerm {
  int c;
  int d;
  bool g;
  LaurentPoly coeff;
};

HeckeElement nf_letters(const std::vector<Letter>& letters, int n, LoopVariant variant);

// Sigma -> Sigma' inside H_{1,2}, eliminating from the largest |exponent of t_1|.
std::vector<PrimeTerm> h12_to_prime(HeckeElement x) {
  auto basis_image = [](int b0, int b1, bool g) {
    std::vector<Letter> w = {{0, b0}, {1, 1}, {0, b1}, {1, -1}};
    if (g) w.push_back({1, 1});
    return nf_letters(w, 2, LoopVariant::T);
  };
  const Perm id = {0, 1};
  const Perm sw = {1, 0};
  std::map<std::tuple<int, int, bool>, LaurentPoly> acc;
  while (!x.is_zero()) {
    int top = 0;
    for (const auto& [b, c] : x.terms()) top = std::max(top, std::abs(b.loops[1]));
    if (top == 0) {
      for (const auto& [b, c] : x.terms()) acc[{b.loops[0], 0, b.perm != id}] += c;
      break;
    }
    std::pair<int, int> pair;
    for (const auto& [b, c] : x.terms()) {
      if (std::abs(b.loops[1]) == top) {
        pair = {b.loops[0], b.loops[1]};
        break;
      }
    }
    BasisWord k0{{pair.first, pair.second}, id};
    BasisWord k1{{pair.first, pair.second}, sw};
    HeckeElement e0 = basis_image(pair.first, pair.second, false);
    HeckeElement e1 = basis_image(pair.first, pair.second, true);
    for (const auto* e : {&e0, &e1}) {
      for (const auto& [b, c] : e->terms()) {
        if (std::abs(b.loops[1]) > top ||
            (std::abs(b.loops[1]) == top && (b.loops[0] != pair.first || b.loops[1] != pair.second))) {
          throw std::logic_error("loop basis change is not triangular");
        }
      }
    }
    LaurentPoly m00 = e0.coeff(k0), m01 = e0.coeff(k1);
    LaurentPoly m10 = e1.coeff(k0), m11 = e1.coeff(k1);
    LaurentPoly det = m00 * m11 - m10 * m01;
    if (!det.is_monomial()) throw std::logic_error("loop basis change has a non-unit pivot");
    LaurentPoly u0 = x.coeff(k0), u1 = x.coeff(k1);
    LaurentPoly v0 = (u0 * m11 - u1 * m10).divided_by_monomial(det);
    LaurentPoly v1 = (u1 * m00 - u0 * m01).divided_by_monomial(det);
    acc[{pair.first, pair.second, false}] += v0;
    acc[{pair.first, pair.second, true}] += v1;
    e0 *= v0;
    e1 *= v1;
    x -= e0;
    x -= e1;
    if (!x.coeff(k0).is_zero() || !x.coeff(k1).is_zero()) {
      throw std::logic_error("loop basis change failed to eliminate");
    }
  }
  std::vector<PrimeTerm> r;
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) r.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), c});
  }
  return r;
}

const std::vector<PrimeTerm>& g_times_prime_pair(int c, int d) {
  thread_local std::map<std::pair<int, int>, std::vector<PrimeTerm>> memo;
  if (auto it = memo.find({c, d}); it != memo.end()) return it->second;
  // t'_1^d = g t^d g^-1.
  HeckeElement x = nf_letters({{1, 1}, {0, c}, {1, 1}, {0, d}, {1, -1}}, 2, LoopVariant::T);
  return memo.emplace(std::make_pair(c, d), h12_to_prime(std::move(x))).first->second;
}

void g_on_prime_basis(int i, const BasisWord& bw, const LaurentPoly& c, Terms& out) {
  std::vector<int> loops = bw.loops;
  for (const auto& t : g_times_prime_pair(bw.loops[i - 1], bw.loops[i])) {
    loops[i - 1] = t.c;
    loops[i] = t.d;
    if (t.g) {
      g_on_perm(i, loops, bw.perm, c * t.coeff, out);
    } else {
      accumulate(out, BasisWord{loops, bw.perm}, c * t.coeff);
    }
  }
}

Terms g_on_terms(int i, const Terms& in, LoopVariant variant) {
  Terms out;
  for (const auto& [b, c] : in) {
    if (variant == LoopVariant::T) {
      g_on_t_basis(i, b, c, out);
    } else {
      g_on_prime_basis(i, b, c, out);
    }
  }
  return out;
}

Terms apply_letter(const Letter& l, const Terms& in, LoopVariant variant) {
  if (l.gen == 0) {
    Terms out;
    for (const auto& [b, c] : in) {
      BasisWord nb = b;
      nb.loops[0] += l.exp;
      accumulate(out, std::move(nb), c);
    }
    return out;
  }
  Terms cur = in;
  for (int r = 0; r < std::abs(l.exp); ++r) {
    Terms g = g_on_terms(l.gen, cur, variant);
    if (l.exp < 0) {
      // g^-1 = q^-1 g + (q^-1 - 1).
      Terms out;
      LaurentPoly qinv = LaurentPoly::q(-1);
      LaurentPoly shift = qinv - LaurentPoly(1L);
      for (auto& [b, c] : g) {
        BasisWord key = b;
        accumulate(out, std::move(key), c * qinv);
      }
      for (const auto& [b, c] : cur) {
        BasisWord key = b;
        accumulate(out, std::move(key), c * shift);
      }
      g = std::move(out);
    }
    cur = std::move(g);
  }
  return cur;
}

HeckeElement from_terms(int n, LoopVariant variant, const Terms& terms) {
  HeckeElement e(n, variant);
  for (const auto& [b, c] : terms) e.add_term(b, c);
  return e;
}

HeckeElement nf_letters(const std::vector<Letter>& letters, int n, LoopVariant variant) {
  Terms cur;
  cur.emplace(identity_basis_word(n), LaurentPoly(1L));
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) cur = apply_letter(*it, cur, variant);
  return from_terms(n, variant, cur);
}

}  // namespace

HeckeElement left_multiply(const Letter& l, const HeckeElement& x) {
  if (l.gen < 0 || l.gen > x.strands() - 1) throw ValidationError("generator index out of range");
  return from_terms(x.strands(), x.variant(), apply_letter(l, x.terms(), x.variant()));
}

HeckeElement left_multiply(const BraidWord& w, const HeckeElement& x) {
  if (w.strands() > x.strands()) throw ValidationError("word has more strands than the element");
  Terms cur = x.terms();
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    cur = apply_letter(*it, cur, x.variant());
  }
  return from_terms(x.strands(), x.variant(), cur);
}

HeckeElement normal_form(const BraidWord& w, LoopVariant variant) {
  return nf_letters(w.letters(), w.strands(), variant);
}

HeckeElement normal_form(const HeckeElement& x, LoopVariant variant) {
  if (x.variant() == variant) return x;
  HeckeElement r(x.strands(), variant);
  for (const auto& [b, c] : x.terms()) {
    HeckeElement image = normal_form(to_braid_word(b, x.variant()), variant);
    image *= c;
    r += image;
  }
  return r;
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  if (a.strands() != b.strands()) throw ValidationError("strand count mismatch in product");
  HeckeElement rhs = normal_form(b, a.variant());
  HeckeElement r(a.strands(), a.variant());
  for (const auto& [w, c] : a.terms()) {
    HeckeElement part = left_multiply(to_braid_word(w, a.variant()), rhs);
    part *= c;
    r += part;
  }
  return r;
}

}  // namespace skein
