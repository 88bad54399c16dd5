#include "holocert/resultant.hpp"

#include <utility>

namespace holocert {

std::vector<std::vector<MPoly>> sylvester_matrix(const MPoly& f, const MPoly& g, const std::string& var) {
  const std::vector<MPoly> fc = f.coefficients(var);
  const std::vector<MPoly> gc = g.coefficients(var);
  const std::size_t m = fc.size() - 1;
  const std::size_t n = gc.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<MPoly>> out(size, std::vector<MPoly>(size));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) out[i][i + k] = fc[m - k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) out[n + i][i + k] = gc[n - k];
  }
  return out;
}

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly(1);
  bool negate = false;
  MPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? num / prev.constant_value() : exact_div(num, prev);
      }
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero()) {
    throw ResultantError("resultant in " + var + " of the zero polynomial (leading coefficient vanishes identically)");
  }
  const unsigned m = f.degree(var);
  const unsigned n = g.degree(var);
  if (m == 0 && n == 0) {
    throw ResultantError("resultant in " + var + " of two polynomials constant in " + var + ": " + f.to_string() +
                         " and " + g.to_string());
  }
  if (m == 0) return f.pow(n);
  if (n == 0) return g.pow(m);
  return bareiss_determinant(sylvester_matrix(f, g, var));
}

}  // namespace holocert
