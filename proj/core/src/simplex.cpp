#include "matchkit/polytope.hpp"

namespace matchkit {

// Phase-1 simplex: minimise the sum of artificial variables for
// A*lambda = b, lambda >= 0. Feasible iff the optimum is zero. Bland's
// rule guarantees termination; everything is exact rational.
bool exact_feasible(const std::vector<std::vector<Rational>>& a,
                    const std::vector<Rational>& b) {
  std::size_t rows = a.size();
  if (rows == 0) return true;
  std::size_t cols = a[0].size();

  // Tableau: [ A | I | rhs ], rhs made nonnegative row-wise.
  std::vector<std::vector<Rational>> t(rows,
                                       std::vector<Rational>(cols + rows + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = sign * a[i][j];
    t[i][cols + i] = 1;
    t[i][cols + rows] = sign * b[i];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  // Objective row for minimising the artificial sum, expressed over the
  // current (artificial) basis: z_j = sum_i t[i][j].
  std::vector<Rational> z(cols + rows + 1);
  for (std::size_t j = 0; j <= cols + rows; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < rows; ++i) s += t[i][j];
    z[j] = s;
  }

  while (true) {
    // Bland: smallest column with positive reduced cost. Artificials
    // stay priced so the textbook optimality guarantee applies.
    std::size_t enter = cols + rows;
    for (std::size_t j = 0; j < cols + rows; ++j) {
      if (z[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols + rows) break;

    std::size_t leave = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == rows) {
        leave = i;
        continue;
      }
      Rational cur = t[i][cols + rows] / t[i][enter];
      Rational best = t[leave][cols + rows] / t[leave][enter];
      if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
    }
    if (leave == rows) break;  // unbounded column; cannot happen here

    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols + rows; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      Rational f = z[enter];
      for (std::size_t j = 0; j <= cols + rows; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  return z[cols + rows] == 0;
}

}  // namespace matchkit
