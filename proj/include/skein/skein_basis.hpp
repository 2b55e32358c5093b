#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skein/braid_word.hpp"
#include "skein/linear_form.hpp"
#include "skein/trace.hpp"

namespace skein {

// Gap-free loop monomial t_0^{k_0} t_1^{k_1} .. t_m^{k_m} (or with t'_i).
// The empty monomial stands for the identity.
struct SkeinMonomial {
  LoopVariant variant = LoopVariant::T;
  std::vector<int> exponents;

  SkeinMonomial() = default;
  SkeinMonomial(LoopVariant v, std::vector<int> ks);

  int index() const { return exponents.empty() ? 0 : static_cast<int>(exponents.size()) - 1; }
  int level() const;
  int strands() const { return index() + 1; }
  bool is_unit() const { return exponents.empty(); }

  // "t^2 t1 t2^3", "t^2 u1 u2^3"; "1" for the identity.
  std::string str() const;
  // Variant T unless a u-letter occurs; indices must run 0, 1, .. without gaps.
  static SkeinMonomial parse(std::string_view text);

  // Plain lexicographic key order, for containers only.
  friend bool operator==(const SkeinMonomial&, const SkeinMonomial&) = default;
  friend auto operator<=>(const SkeinMonomial&, const SkeinMonomial&) = default;
};

enum class BasisSet { Lambda, LambdaPrime, LambdaAug };

// Exponent monotonicity required for Lambda and Lambda'. The exponents are
// weakly increasing by default; the mirrored convention is kept for
// comparison runs.
enum class ExponentOrder { Increasing, Decreasing };

bool is_member(const SkeinMonomial& m, BasisSet set, ExponentOrder order = ExponentOrder::Increasing);

// Level first, then index, then exponents compared from the top loop down:
// smaller absolute value is lower, and on equal absolute values the
// positive exponent is lower.
std::strong_ordering compare(const SkeinMonomial& w, const SkeinMonomial& u);

struct EnumerationBounds {
  int max_index = 2;
  int exp_bound = 3;
  bool positive_only = false;
};

// All monomials of the set at the given level within bounds, ascending.
std::vector<SkeinMonomial> enumerate_level(BasisSet set, int level, const EnumerationBounds& bounds,
                                           ExponentOrder order = ExponentOrder::Increasing);

BraidWord to_braid_word(const SkeinMonomial& m);
TraceValue trace_of(const SkeinMonomial& m);

using MonomialCombination = std::vector<std::pair<SkeinMonomial, RationalFn>>;

// tr(m) written on Lambda' monomials, read off from the s-monomials of tr(m).
// Sorted ascending by compare.
MonomialCombination convert_to_lambda_prime(const SkeinMonomial& m,
                                            ExponentOrder order = ExponentOrder::Increasing);

LinearForm trace_of_combination(const MonomialCombination& c);

struct Decomposition {
  MonomialCombination terms;  // ascending by compare
  bool closed_form = false;   // top pair positive: swap formula
  bool exact = false;         // sum a_i tr(tau_i) == tr(m) was checked
  bool strictly_lower = false;
  std::vector<SkeinMonomial> violations;  // terms not below m
};

// Rewrites m (index >= 1, variant T) as a combination of Lambda^aug
// monomials through the top-pair swap. Positive top pairs use the closed
// formula; other sign patterns are solved for over the lower monomials
// sharing m's prefix.
Decomposition decompose_to_lower(const SkeinMonomial& m);

// Closed swap formula for the top pair (a, b), a, b >= 1.
MonomialCombination top_pair_swap_formula(const SkeinMonomial& m);

}  // namespace skein
