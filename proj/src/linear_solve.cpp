#include "skein/linear_solve.hpp"

#include <map>
#include <utility>

namespace skein {

SpanResult solve_in_span(const std::vector<LinearForm>& columns, const LinearForm& target) {
  std::map<SMonomial, int> row_of;
  auto register_rows = [&](const LinearForm& f) {
    for (const auto& [m, c] : f.terms()) row_of.try_emplace(m, 0);
  };
  for (const auto& c : columns) register_rows(c);
  register_rows(target);
  std::vector<SMonomial> row_keys;
  for (auto& [m, r] : row_of) {
    r = static_cast<int>(row_keys.size());
    row_keys.push_back(m);
  }

  const int rows = static_cast<int>(row_keys.size());
  const int cols = static_cast<int>(columns.size());
  std::vector<std::vector<RationalFn>> a(rows, std::vector<RationalFn>(cols + 1));
  for (int j = 0; j < cols; ++j) {
    for (const auto& [m, c] : columns[j].terms()) a[row_of[m]][j] = c;
  }
  for (const auto& [m, c] : target.terms()) a[row_of[m]][cols] = c;
  std::vector<int> origin(rows);
  for (int i = 0; i < rows; ++i) origin[i] = i;

  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    int best = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][j].is_zero()) continue;
      if (best < 0 || a[i][j].complexity() < a[best][j].complexity()) best = i;
    }
    if (best < 0) continue;
    std::swap(a[r], a[best]);
    std::swap(origin[r], origin[best]);
    RationalFn inv = a[r][j].inverse();
    for (int jj = j; jj <= cols; ++jj) {
      if (!a[r][jj].is_zero()) a[r][jj] *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][j].is_zero()) continue;
      RationalFn f = a[i][j];
      for (int jj = j; jj <= cols; ++jj) {
        if (!a[r][jj].is_zero()) a[i][jj] -= f * a[r][jj];
      }
    }
    pivot_col.push_back(j);
    ++r;
  }

  SpanResult result;
  for (int i = r; i < rows; ++i) {
    if (!a[i][cols].is_zero()) result.residual.add_term(row_keys[origin[i]], a[i][cols]);
  }
  if (!result.residual.is_zero()) return result;
  std::vector<RationalFn> coeffs(cols);
  for (int i = 0; i < r; ++i) coeffs[pivot_col[i]] = a[i][cols];
  result.coefficients = std::move(coeffs);
  return result;
}

}  // namespace skein
