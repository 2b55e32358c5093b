#pragma once

#include <string>

#include "skein/rational_fn.hpp"

namespace skein {

// lambda = (z + 1 - q)/(q*z).
const RationalFn& lambda();

// coeff * sqrt(lambda)^half_power with half_power in {0, 1}; even powers of
// sqrt(lambda) are folded into coeff.
class SqrtLambdaScalar {
 public:
  SqrtLambdaScalar() : coeff_(1L) {}
  SqrtLambdaScalar(int half_power, RationalFn coeff);

  // sqrt(lambda)^e for any integer e.
  static SqrtLambdaScalar sqrt_lambda_pow(int e);

  int half_power() const { return half_power_; }
  const RationalFn& coeff() const { return coeff_; }

  SqrtLambdaScalar& operator*=(const SqrtLambdaScalar& o);
  friend SqrtLambdaScalar operator*(SqrtLambdaScalar a, const SqrtLambdaScalar& b) { return a *= b; }
  friend bool operator==(const SqrtLambdaScalar&, const SqrtLambdaScalar&) = default;

  SqrtLambdaScalar inverse() const;
  SqrtLambdaScalar pow(int e) const;

  std::string str() const;

 private:
  int half_power_ = 0;
  RationalFn coeff_;
};

// Delta = -(1 - lambda*q)/(sqrt(lambda)*(1 - q)), evaluated from that formula.
const SqrtLambdaScalar& delta();

}  // namespace skein
