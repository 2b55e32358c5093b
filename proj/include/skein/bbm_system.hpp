#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/linear_solve.hpp"
#include "skein/skein_basis.hpp"

namespace skein {

// The constraint X(T) = X(bbm(T)) written as
//   form = tr(T) - scalar * tr(bbm(T)),
// which has to vanish for X to pass to the lens space.
struct Equation {
  SkeinMonomial monomial;
  int strand = 1;
  int sign = 1;
  int p = 0;
  RationalFn scalar;  // Delta^{n_b - n_a} sqrt(lambda)^{e_b - e_a}
  LinearForm form;

  std::string label() const;  // "t t1^2 | m=2 | +"
};

// Band move on the given moving strand of T (variant T).
Equation equation_for(const SkeinMonomial& t, int strand, int sign, int p);

// lambda^{level + (sign - 1)/2} / z.
RationalFn expected_bbm_scalar(int level, int sign);

enum class StrandPolicy { FirstOnly, AllStrands };

struct SystemConfig {
  BasisSet set = BasisSet::Lambda;
  int level = 3;
  EnumerationBounds bounds;
  int p = 1;
  std::vector<int> signs{1, -1};
  StrandPolicy policy = StrandPolicy::AllStrands;
  ExponentOrder order = ExponentOrder::Increasing;
  int jobs = 1;
};

struct EquationSystem {
  SystemConfig config;
  std::vector<SMonomial> unknowns;  // sorted
  std::vector<Equation> rows;       // monomials ascending, then strand, then sign + before -
};

EquationSystem generate_system(const SystemConfig& config);

struct SpanCheck {
  std::optional<std::vector<RationalFn>> coefficients;
  bool numeric_ok = false;  // re-checked at three random rational points
  LinearForm residual;
};

SpanCheck span_membership(const Equation& target, const std::vector<Equation>& generators,
                          unsigned long long seed = 20240917);

struct TargetReport {
  Equation target;
  std::vector<Equation> generators;
  SpanCheck check;
  // Same question with strictly lower generators; asked only for strand >= 2.
  std::optional<SpanCheck> strict_check;
  std::vector<Equation> strict_generators;
};

struct TheoremReport {
  SystemConfig config;
  std::vector<TargetReport> targets;
  double seconds = 0;
  bool all_in_span() const;
  bool all_strict() const;
};

// For every T in Lambda_(k) within bounds, every strand m <= ind(T) + 1 and
// every sign: is equation_for(T, m, sign) in the span of first-strand
// equations of Lambda^aug monomials tau <= T (and tau < T when m >= 2)?
TheoremReport verify_main_theorem(const SystemConfig& config);

}  // namespace skein
