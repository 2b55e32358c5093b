#include "skein/sqrt_lambda.hpp"

namespace skein {

const RationalFn& lambda() {
  static const RationalFn value(LaurentPoly::z() + LaurentPoly(1L) - LaurentPoly::q(),
                                LaurentPoly::monomial(1, 1, 1));
  return value;
}

SqrtLambdaScalar::SqrtLambdaScalar(int half_power, RationalFn coeff) : coeff_(std::move(coeff)) {
  int folded = half_power >= 0 ? half_power / 2 : -((1 - half_power) / 2);
  half_power_ = half_power - 2 * folded;
  if (folded != 0) coeff_ *= lambda().pow(folded);
}

SqrtLambdaScalar SqrtLambdaScalar::sqrt_lambda_pow(int e) { return SqrtLambdaScalar(e, RationalFn(1L)); }

SqrtLambdaScalar& SqrtLambdaScalar::operator*=(const SqrtLambdaScalar& o) {
  *this = SqrtLambdaScalar(half_power_ + o.half_power_, coeff_ * o.coeff_);
  return *this;
}

SqrtLambdaScalar SqrtLambdaScalar::inverse() const {
  return SqrtLambdaScalar(-half_power_, coeff_.inverse());
}

SqrtLambdaScalar SqrtLambdaScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  SqrtLambdaScalar r;
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

std::string SqrtLambdaScalar::str() const {
  if (half_power_ == 0) return coeff_.str();
  if (coeff_ == RationalFn(1L)) return "sqrt(lambda)";
  std::string c = coeff_.str();
  if (c.find_first_of("+- ") != std::string::npos) c = "(" + c + ")";
  return "sqrt(lambda)*" + c;
}

const SqrtLambdaScalar& delta() {
  static const SqrtLambdaScalar value = [] {
    RationalFn q = LaurentPoly::q();
    RationalFn numerator = -(RationalFn(1L) - lambda() * q);
    SqrtLambdaScalar sqrt_l_times = SqrtLambdaScalar(1, RationalFn(1L) - q);
    return SqrtLambdaScalar(0, numerator) * sqrt_l_times.inverse();
  }();
  return value;
}

}  // namespace skein
