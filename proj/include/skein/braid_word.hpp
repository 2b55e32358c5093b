#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace skein {

// Generator 0 is the loop generator t; generator i >= 1 is sigma_i.
struct Letter {
  int gen = 0;
  int exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

enum class LoopVariant { T, TPrime };

// Word in the mixed braid group B_{1,n}: t and sigma_1 .. sigma_{n-1}.
// Adjacent letters on the same generator are merged and zero exponents
// dropped on construction, so equal words compare equal.
class BraidWord {
 public:
  explicit BraidWord(int strands = 1);
  BraidWord(int strands, const std::vector<Letter>& letters);

  static BraidWord parse(std::string_view text, int strands);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  void append(Letter l);
  BraidWord& operator*=(const BraidWord& o);
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  BraidWord inverse() const;
  // Same letters viewed in B_{1,n} for n >= strands().
  BraidWord embedded(int n) const;

  int sigma_exponent_sum() const;
  int t_exponent_sum() const;

  // sigma_i -> sigma_{i+1}, t -> t_1 (expanded), n -> n+1.
  BraidWord shift_indices() const;

  // "t^2 g1^-1"; the empty word prints as "1".
  std::string str() const;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

// The k-th power of the looping element t_i (variant T) or t'_i (TPrime),
// as a word in n strands.
BraidWord expand_loop(int i, LoopVariant variant, int k, int strands);

struct Conjugate {
  BraidWord by;
};
struct Stabilize {
  int sign;
};
struct LoopConjugate {
  int sign;
};
struct Bbm {
  int strand;
  int sign;
  int p;
};
using Move = std::variant<Conjugate, Stabilize, LoopConjugate, Bbm>;

// Conjugate(v): v^-1 w v. Stabilize(s): w sigma_n^s in n+1 strands.
// LoopConjugate(s): t^s w t^-s. Bbm(m, e, p): t^p w_+ sigma_m .. sigma_2
// sigma_1^e sigma_2^-1 .. sigma_m^-1, with w first embedded in m strands
// when it has fewer.
BraidWord apply_move(const BraidWord& w, const Move& move);

}  // namespace skein
