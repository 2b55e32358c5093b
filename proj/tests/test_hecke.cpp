#include <doctest.h>

#include "random_gen.hpp"
#include "skein/hecke.hpp"

using namespace skein;
using skein::testing::uniform;

namespace {

BraidWord W(const char* s, int n) { return BraidWord::parse(s, n); }
HeckeElement nf(const char* s, int n, LoopVariant v = LoopVariant::T) { return normal_form(W(s, n), v); }
HeckeElement nfp(const char* s, int n) { return nf(s, n, LoopVariant::TPrime); }

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly one(1L);

HeckeElement combo(int n, LoopVariant v, std::initializer_list<std::pair<LaurentPoly, const char*>> terms) {
  HeckeElement r(n, v);
  for (const auto& [c, w] : terms) {
    HeckeElement e = normal_form(W(w, n), v);
    e *= c;
    r += e;
  }
  return r;
}

BraidWord random_word(int n, int max_len) {
  BraidWord w(n);
  int len = uniform(0, max_len);
  for (int i = 0; i < len; ++i) w.append({uniform(0, n - 1), uniform(-2, 2)});
  return w;
}

}  // namespace

TEST_CASE("reduced words have the S_n shape") {
  CHECK(reduced_word({0, 1, 2}).empty());
  CHECK(reduced_word({1, 0}) == std::vector<int>{1});
  CHECK(reduced_word({2, 1, 0}) == std::vector<int>{1, 2, 1});
  CHECK(reduced_word({2, 0, 1}) == std::vector<int>{2, 1});
  CHECK(reduced_word({1, 2, 0}) == std::vector<int>{1, 2});
  // Every permutation of S_4 round-trips through its word.
  Perm p = {0, 1, 2, 3};
  int count = 0;
  do {
    std::vector<int> word = reduced_word(p);
    CHECK(static_cast<int>(word.size()) == perm_length(p));
    BraidWord w(4);
    for (int g : word) w.append({g, 1});
    HeckeElement e = normal_form(w, LoopVariant::T);
    CHECK(e == HeckeElement::basis({{0, 0, 0, 0}, p}, LoopVariant::T));
    ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(count == 24);
}

TEST_CASE("quadratic relation and inverse") {
  for (auto v : {LoopVariant::T, LoopVariant::TPrime}) {
    CHECK(nf("g1 g1", 2, v) == combo(2, v, {{q - one, "g1"}, {q, "1"}}));
    CHECK(nf("g1^-1", 2, v) == combo(2, v, {{q.pow(-1), "g1"}, {q.pow(-1) - one, "1"}}));
  }
  CHECK(nf("g1^2", 2).str() == "q + (q-1)*g1");
}

TEST_CASE("t_1 in the primed basis") {
  CHECK(nfp("t1", 2) == combo(2, LoopVariant::TPrime, {{q - one, "u1 g1"}, {q, "u1"}}));
}

TEST_CASE("defining relations hold for n <= 4") {
  for (auto v : {LoopVariant::T, LoopVariant::TPrime}) {
    for (int n = 2; n <= 4; ++n) {
      for (int i = 1; i <= n - 2; ++i) {
        BraidWord a(n, {{i, 1}, {i + 1, 1}, {i, 1}});
        BraidWord b(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
        CHECK(normal_form(a, v) == normal_form(b, v));
      }
      for (int i = 1; i <= n - 1; ++i) {
        HeckeElement sq = normal_form(BraidWord(n, {{i, 2}}), v);
        HeckeElement expected = normal_form(BraidWord(n, {{i, 1}}), v);
        expected *= q - one;
        expected += [&] {
          HeckeElement id = HeckeElement::identity(n, v);
          id *= q;
          return id;
        }();
        CHECK(sq == expected);
        for (int j = i + 2; j <= n - 1; ++j) {
          CHECK(normal_form(BraidWord(n, {{i, 1}, {j, 1}}), v) == normal_form(BraidWord(n, {{j, 1}, {i, 1}}), v));
        }
        if (i > 1) {
          CHECK(normal_form(BraidWord(n, {{0, 1}, {i, 1}}), v) == normal_form(BraidWord(n, {{i, 1}, {0, 1}}), v));
        }
      }
      CHECK(normal_form(BraidWord(n, {{1, 1}, {0, 1}, {1, 1}, {0, 1}}), v) ==
            normal_form(BraidWord(n, {{0, 1}, {1, 1}, {0, 1}, {1, 1}}), v));
    }
  }
}

TEST_CASE("basis words are fixed by the normal form") {
  for (auto v : {LoopVariant::T, LoopVariant::TPrime}) {
    for (int n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 60; ++trial) {
        BasisWord b = identity_basis_word(n);
        for (int i = 0; i < n; ++i) b.loops[i] = uniform(-3, 3);
        std::shuffle(b.perm.begin(), b.perm.end(), skein::testing::rng());
        CHECK(normal_form(to_braid_word(b, v), v) == HeckeElement::basis(b, v));
      }
    }
  }
}

TEST_CASE("both bases describe the same element") {
  for (int trial = 0; trial < 80; ++trial) {
    int n = uniform(1, 3);
    BraidWord w = random_word(n, 6);
    HeckeElement a = normal_form(w, LoopVariant::T);
    HeckeElement b = normal_form(w, LoopVariant::TPrime);
    CHECK(normal_form(a, LoopVariant::TPrime) == b);
    CHECK(normal_form(b, LoopVariant::T) == a);
  }
}

TEST_CASE("normal form is multiplicative") {
  for (int trial = 0; trial < 200; ++trial) {
    int n = uniform(1, 3);
    auto v = uniform(0, 1) ? LoopVariant::T : LoopVariant::TPrime;
    BraidWord u = random_word(n, 5);
    BraidWord w = random_word(n, 5);
    CHECK(normal_form(u * w, v) == multiply(normal_form(u, v), normal_form(w, v)));
  }
}

TEST_CASE("multiplication") {
  HeckeElement id = HeckeElement::identity(2, LoopVariant::T);
  HeckeElement a = nf("t^2 g1 t", 2);
  CHECK(multiply(id, a) == a);
  CHECK(multiply(nf("g1", 2), nf("g1", 2)) == combo(2, LoopVariant::T, {{q - one, "g1"}, {q, "1"}}));
  // t and t_1 commute; t and t'_1 do not.
  CHECK(multiply(nf("t", 2), nf("t1", 2)) == multiply(nf("t1", 2), nf("t", 2)));
  CHECK(multiply(nfp("t", 2), nfp("u1", 2)) != multiply(nfp("u1", 2), nfp("t", 2)));
}

TEST_CASE("rewriting identities") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 5; ++k) CHECK(verify_identity(Identity::Eq5, n, k).holds);
    for (int k = -5; k <= -1; ++k) {
      CHECK(verify_identity(Identity::Eq5, n, k, true).holds);
      CHECK_FALSE(verify_identity(Identity::Eq5, n, k, false).holds);
    }
  }
  for (int n = 1; n <= 2; ++n) {
    for (int k = 1; k <= 5; ++k) CHECK(verify_identity(Identity::Lemma2i, n, k).holds);
    for (int k = -5; k <= -1; ++k) {
      CHECK(verify_identity(Identity::Lemma2ii, n, k, true).holds);
      CHECK_FALSE(verify_identity(Identity::Lemma2ii, n, k, false).holds);
    }
  }
}

TEST_CASE("loop past its own braiding generator at n = 1, k = 2") {
  HeckeElement lhs = nf("t1^2 g1", 2);
  HeckeElement rhs = combo(2, LoopVariant::T, {{q - one, "t1^2"}, {q * (q - one), "t t1"}, {q * q, "g1 t^2"}});
  CHECK(lhs == rhs);
  CHECK(nf("t1 g2", 3) == nf("g2^-1 t2", 3));
}
