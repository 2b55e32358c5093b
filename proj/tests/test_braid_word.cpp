#include <doctest.h>

#include "random_gen.hpp"
#include "skein/braid_word.hpp"
#include "skein/error.hpp"

using namespace skein;

namespace {

BraidWord W(const char* s, int n) { return BraidWord::parse(s, n); }

}  // namespace

TEST_CASE("parse and print") {
  BraidWord w = W("t^2 g1^-1", 2);
  REQUIRE(w.letters().size() == 2);
  CHECK(w.letters()[0] == Letter{0, 2});
  CHECK(w.letters()[1] == Letter{1, -1});
  CHECK(w.str() == "t^2 g1^-1");
  CHECK(W(w.str().c_str(), 2) == w);
  CHECK(W("1", 3).empty());
  CHECK(BraidWord(3).str() == "1");
  CHECK(W("g1 g1^-1 t t^-1", 2).empty());
  CHECK(W("t1^3 g1", 2).str() == "g1 t g1^2 t g1^2 t g1^2");
  CHECK(W("u1", 2).str() == "g1 t g1^-1");
  CHECK(W("u2^-2", 3).str() == "g2 g1 t^-2 g1^-1 g2^-1");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(W("g3", 2), ValidationError);
  CHECK_THROWS_AS(W("t2", 2), ValidationError);
  CHECK_THROWS_AS(W("g0", 2), ParseError);
  CHECK_THROWS_AS(W("x1", 2), ParseError);
  CHECK_THROWS_AS(W("g1^", 2), ParseError);
  CHECK_THROWS_AS(W("g1^0", 2), ParseError);
  CHECK_THROWS_AS(W("g", 2), ParseError);
  try {
    W("t g1 x9", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("exponent sums") {
  CHECK(W("t^2 g1^2 g2^-1", 3).sigma_exponent_sum() == 1);
  for (int k = -3; k <= 3; ++k) {
    if (k == 0) continue;
    CHECK(expand_loop(1, LoopVariant::T, k, 2).sigma_exponent_sum() == 2 * k);
    CHECK(expand_loop(2, LoopVariant::TPrime, k, 3).sigma_exponent_sum() == 0);
  }
  CHECK(W("t t1^2", 2).sigma_exponent_sum() == 4);
}

TEST_CASE("expand_loop") {
  CHECK(expand_loop(0, LoopVariant::T, 3, 1) == W("t^3", 1));
  CHECK(expand_loop(1, LoopVariant::TPrime, 1, 2).str() == "g1 t g1^-1");
  CHECK(expand_loop(1, LoopVariant::T, 2, 2).str() == "g1 t g1^2 t g1");
  CHECK(expand_loop(1, LoopVariant::T, -1, 2).str() == "g1^-1 t^-1 g1^-1");
  CHECK(expand_loop(2, LoopVariant::T, 1, 3).str() == "g2 g1 t g1 g2");
  CHECK_THROWS_AS(expand_loop(2, LoopVariant::T, 1, 2), ValidationError);
}

TEST_CASE("shift_indices") {
  CHECK(W("t", 1).shift_indices() == W("t1", 2));
  CHECK(W("g1", 2).shift_indices() == W("g2", 3));
  CHECK(W("t t1^2", 2).shift_indices() == W("t1 t2^2", 3));
}

TEST_CASE("moves") {
  BraidWord t3 = W("t^3", 1);
  CHECK(apply_move(t3, Bbm{1, 1, 2}) == W("t^2 t1^3 g1", 2));
  CHECK(apply_move(W("t t1^2", 2), Bbm{2, 1, 1}) == W("t t1 t2^2 g2 g1 g2^-1", 3));
  CHECK(apply_move(W("t^2", 1), Bbm{1, -1, 0}) == W("t1^2 g1^-1", 2));
  CHECK(apply_move(W("t^2", 1), Bbm{3, 1, 0}).strands() == 4);
  CHECK_THROWS_AS(apply_move(t3, Bbm{0, 1, 1}), ValidationError);
  CHECK(apply_move(W("t g1", 2), Stabilize{-1}) == W("t g1 g2^-1", 3));
  CHECK(apply_move(W("g1", 2), LoopConjugate{1}) == W("t g1 t^-1", 2));
  CHECK(apply_move(W("t g1", 2), Conjugate{W("g1", 2)}) == W("g1^-1 t g1^2", 2));
}

TEST_CASE("move properties on random words") {
  using skein::testing::uniform;
  for (int trial = 0; trial < 200; ++trial) {
    int n = uniform(1, 3);
    BraidWord w(n);
    BraidWord v(n);
    for (int i = 0; i < uniform(0, 6); ++i) w.append({uniform(0, n - 1), uniform(-2, 2)});
    for (int i = 0; i < uniform(0, 4); ++i) v.append({uniform(0, n - 1), uniform(-2, 2)});
    BraidWord c = apply_move(w, Conjugate{v});
    CHECK(apply_move(c, Conjugate{v.inverse()}) == w);
    int eps = uniform(0, 1) ? 1 : -1;
    int m = uniform(1, n);
    BraidWord b = apply_move(w, Bbm{m, eps, uniform(-2, 2)});
    CHECK(b.sigma_exponent_sum() == w.sigma_exponent_sum() + 2 * w.t_exponent_sum() + eps);
    BraidWord s = w.shift_indices();
    CHECK(s.t_exponent_sum() == w.t_exponent_sum());
    CHECK(s.sigma_exponent_sum() == w.sigma_exponent_sum() + 2 * w.t_exponent_sum());
    CHECK(BraidWord::parse(w.str(), n) == w);
  }
}
