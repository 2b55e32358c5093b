#include "skein/error.hpp"
#include "skein/hecke.hpp"

namespace skein {

namespace {

class WordSum {
 public:
  explicit WordSum(int strands) : strands_(strands), value_(strands, LoopVariant::T) {}

  // Adds coeff * (product of the given factors).
  void add(const LaurentPoly& coeff, std::initializer_list<BraidWord> factors) {
    BraidWord w(strands_);
    for (const auto& f : factors) w *= f;
    HeckeElement e = normal_form(w, LoopVariant::T);
    e *= coeff;
    value_ += e;
  }

  BraidWord loop(int i, int k) const { return expand_loop(i, LoopVariant::T, k, strands_); }
  BraidWord g(int i, int e) const { return BraidWord(strands_, {{i, e}}); }
  const HeckeElement& value() const { return value_; }

 private:
  int strands_;
  HeckeElement value_;
};

}  // namespace

IdentityCheck verify_identity(Identity id, int n, int k, bool derived) {
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly one(1L);
  if (k == 0) throw ValidationError("identity exponent must be nonzero");
  switch (id) {
    case Identity::Eq5: {
      if (n < 1) throw ValidationError("Eq5 needs n >= 1");
      WordSum lhs(n + 1), rhs(n + 1);
      lhs.add(one, {lhs.loop(n, k), lhs.g(n, 1)});
      if (k > 0) {
        for (int j = 0; j <= k - 1; ++j) rhs.add((q - one) * q.pow(j), {rhs.loop(n - 1, j), rhs.loop(n, k - j)});
      } else if (derived) {
        for (int j = k; j <= -1; ++j) rhs.add(-(q - one) * q.pow(j), {rhs.loop(n - 1, j), rhs.loop(n, k - j)});
      }
      rhs.add(q.pow(k), {rhs.g(n, 1), rhs.loop(n - 1, k)});
      return {lhs.value() == rhs.value(), lhs.value(), rhs.value()};
    }
    case Identity::Lemma2i: {
      if (n < 0) throw ValidationError("Lemma2i needs n >= 0");
      if (k < 1) throw ValidationError("Lemma2i needs k >= 1");
      WordSum lhs(n + 2), rhs(n + 2);
      lhs.add(one, {lhs.loop(n, k), lhs.g(n + 1, 1)});
      rhs.add(q.pow(-(k - 1)), {rhs.g(n + 1, -1), rhs.loop(n + 1, k)});
      for (int j = 0; j <= k - 2; ++j) {
        rhs.add((q.pow(-1) - one) * q.pow(-j), {rhs.loop(n, k - j - 1), rhs.loop(n + 1, j + 1)});
      }
      return {lhs.value() == rhs.value(), lhs.value(), rhs.value()};
    }
    case Identity::Lemma2ii: {
      if (n < 0) throw ValidationError("Lemma2ii needs n >= 0");
      if (k > -1) throw ValidationError("Lemma2ii needs k <= -1");
      WordSum lhs(n + 2), rhs(n + 2);
      if (derived) {
        lhs.add(one, {lhs.loop(n, k), lhs.g(n + 1, -1)});
        rhs.add(q.pow(-k - 1), {rhs.g(n + 1, 1), rhs.loop(n + 1, k)});
        for (int j = 0; j <= -k - 2; ++j) {
          rhs.add((q - one) * q.pow(j), {rhs.loop(n, k + j + 1), rhs.loop(n + 1, -j - 1)});
        }
      } else {
        lhs.add(one, {lhs.loop(n, k), lhs.g(n + 1, 1)});
        rhs.add(q.pow(k), {rhs.g(n + 1, -1), rhs.loop(n + 1, k)});
        for (int j = 1; j <= -k; ++j) {
          rhs.add((q.pow(-1) - one) * q.pow(k + j), {rhs.loop(n, -j), rhs.loop(n + 1, k + j)});
        }
      }
      return {lhs.value() == rhs.value(), lhs.value(), rhs.value()};
    }
  }
  throw ValidationError("unknown identity");
}

}  // namespace skein
