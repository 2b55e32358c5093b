#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "skein/braid_word.hpp"
#include "skein/laurent_poly.hpp"

namespace skein {

// Permutation in one-line notation on {0, .., n-1}.
using Perm = std::vector<int>;

Perm identity_perm(int n);
int perm_length(const Perm& w);

// Generator indices i_1 .. i_k with T_w = g_{i_1} .. g_{i_k}, read off the
// canonical S_n shape (g_{i1} g_{i1-1} .. g_{i1-k1}) (g_{i2} ..) .. with
// increasing block heads.
std::vector<int> reduced_word(const Perm& w);

// Basis element of H_{1,n}(q): a loop monomial followed by T_w.
//
// For LoopVariant::T the loop part is t_0^{a_0} t_1^{a_1} .. t_{n-1}^{a_{n-1}}
// (the t_i commute); for TPrime it is t'_0^{b_0} .. t'_{n-1}^{b_{n-1}} in
// that order. Zero exponents mean the letter is absent.
struct BasisWord {
  std::vector<int> loops;
  Perm perm;

  int strands() const { return static_cast<int>(perm.size()); }
  friend bool operator==(const BasisWord&, const BasisWord&) = default;
  friend auto operator<=>(const BasisWord&, const BasisWord&) = default;
};

BasisWord identity_basis_word(int n);
BraidWord to_braid_word(const BasisWord& b, LoopVariant variant);
std::string basis_word_str(const BasisWord& b, LoopVariant variant);

// Finite linear combination of basis words of one variant.
class HeckeElement {
 public:
  using Terms = std::map<BasisWord, LaurentPoly>;

  HeckeElement(int strands, LoopVariant variant) : strands_(strands), variant_(variant) {}
  static HeckeElement identity(int strands, LoopVariant variant);
  static HeckeElement basis(const BasisWord& b, LoopVariant variant);

  int strands() const { return strands_; }
  LoopVariant variant() const { return variant_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const BasisWord& b) const;

  void add_term(const BasisWord& b, const LaurentPoly& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const LaurentPoly& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  // Same element viewed in H_{1,m}, m >= strands().
  HeckeElement embedded(int m) const;

  std::string str() const;

 private:
  int strands_;
  LoopVariant variant_;
  Terms terms_;
};

// Left multiplication by a single letter (generator, exponent).
HeckeElement left_multiply(const Letter& l, const HeckeElement& x);
HeckeElement left_multiply(const BraidWord& w, const HeckeElement& x);

HeckeElement normal_form(const BraidWord& w, LoopVariant variant);
// Re-expresses x in the requested basis.
HeckeElement normal_form(const HeckeElement& x, LoopVariant variant);

// Product a*b in a's variant. Requires equal strand counts.
HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);

enum class Identity { Eq5, Lemma2i, Lemma2ii };

struct IdentityCheck {
  bool holds;
  HeckeElement lhs;
  HeckeElement rhs;
};

// Rewriting identities for loop generators passing braiding generators.
// derived = true selects the negative-exponent forms obtained from the
// positive ones through the involution q -> q^-1, g -> g^-1, t -> t^-1.
//
//   Eq5, k > 0:   t_n^k g_n = (q-1) sum_{j=0}^{k-1} q^j t_{n-1}^j t_n^{k-j} + q^k g_n t_{n-1}^k
//   Eq5, k < 0:   as above with the sum read literally (empty); derived:
//                 t_n^k g_n = -(q-1) sum_{j=k}^{-1} q^j t_{n-1}^j t_n^{k-j} + q^k g_n t_{n-1}^k
//   Lemma2i:      t_n^k g_{n+1} = q^{-(k-1)} g_{n+1}^-1 t_{n+1}^k
//                   + (q^-1 - 1) sum_{j=0}^{k-2} q^-j t_n^{k-j-1} t_{n+1}^{j+1}
//   Lemma2ii:     t_n^k g_{n+1} = q^k g_{n+1}^-1 t_{n+1}^k
//                   + (q^-1 - 1) sum_{j=1}^{-k} q^{k+j} t_n^-j t_{n+1}^{k+j}
//   derived:      t_n^k g_{n+1}^-1 = q^{-k-1} g_{n+1} t_{n+1}^k
//                   + (q-1) sum_{j=0}^{-k-2} q^j t_n^{k+j+1} t_{n+1}^{-j-1}
IdentityCheck verify_identity(Identity id, int n, int k, bool derived = false);

}  // namespace skein
