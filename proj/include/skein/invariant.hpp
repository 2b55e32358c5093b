#pragma once

#include <string>

#include "skein/braid_word.hpp"
#include "skein/linear_form.hpp"
#include "skein/sqrt_lambda.hpp"

namespace skein {

// sqrt(lambda)^half_power * form, half_power in {0, 1}.
struct XValue {
  int half_power = 0;
  LinearForm form;

  friend bool operator==(const XValue&, const XValue&) = default;
  std::string str() const;
};

// Delta^{n-1} sqrt(lambda)^e tr(w), e the sigma exponent sum and n the
// strand count of w.
XValue x_invariant(const BraidWord& w);

// Scalar Delta^{n-1} sqrt(lambda)^e alone.
SqrtLambdaScalar x_scalar(int strands, int sigma_exponent_sum);

// Whether X agrees on w and apply_move(w, move). Band moves are rejected:
// X is not expected to be invariant under them.
bool check_markov_invariance(const BraidWord& w, const Move& move);

}  // namespace skein
