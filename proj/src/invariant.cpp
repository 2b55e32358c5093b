#include "skein/invariant.hpp"

#include "skein/error.hpp"

namespace skein {

std::string XValue::str() const {
  if (half_power == 0) return form.str();
  return "sqrt(lambda) * (" + form.str() + ")";
}

SqrtLambdaScalar x_scalar(int strands, int sigma_exponent_sum) {
  return delta().pow(strands - 1) * SqrtLambdaScalar::sqrt_lambda_pow(sigma_exponent_sum);
}

XValue x_invariant(const BraidWord& w) {
  SqrtLambdaScalar scalar = x_scalar(w.strands(), w.sigma_exponent_sum());
  XValue v;
  v.half_power = scalar.half_power();
  v.form = LinearForm(markov_trace(w)) * scalar.coeff();
  return v;
}

bool check_markov_invariance(const BraidWord& w, const Move& move) {
  if (std::holds_alternative<Bbm>(move)) throw ValidationError("band moves are not Markov moves");
  return x_invariant(w) == x_invariant(apply_move(w, move));
}

}  // namespace skein
