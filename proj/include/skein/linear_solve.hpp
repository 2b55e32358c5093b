#pragma once

#include <optional>
#include <vector>

#include "skein/linear_form.hpp"

namespace skein {

struct SpanResult {
  // Coefficients c_i with target = sum c_i columns[i]; free variables are 0.
  std::optional<std::vector<RationalFn>> coefficients;
  // Inconsistent entries left after elimination when the target is not in
  // the span, keyed by the row's s-monomial.
  LinearForm residual;
};

// Exact Gaussian elimination over Q(q, z); pivots are chosen by lowest
// complexity within each column.
SpanResult solve_in_span(const std::vector<LinearForm>& columns, const LinearForm& target);

}  // namespace skein
