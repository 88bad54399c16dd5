#pragma once

#include <vector>

#include "holocert/gaussian_rational.hpp"
#include "holocert/mpoly.hpp"

namespace holocert {

/// Matrix of L_d(f) = f' r + (d-1)(s - r') f from polynomials of degree
/// <= 2d-3 to polynomials of degree <= 2d-2, monomial bases, row = degree.
struct BandedMatrix {
  int d = 0;
  GR lambda1;
  GR lambda2;
  GR A;  ///< (d-1)(lambda2 - lambda1), the diagonal of the full matrix
  GR B;  ///< (d-1)(lambda1 + lambda2)
  std::vector<std::vector<GR>> entries;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
  /// Diagonal of the square matrix left after dropping row 0, at column k.
  GR reduced_diagonal(std::size_t k) const;
  /// The square matrix left after dropping row 0.
  std::vector<std::vector<GR>> reduced() const;
};

/// L_d applied directly with polynomial arithmetic.
MPoly apply_Ld(int d, const GR& lambda1, const GR& lambda2, const MPoly& f);

/// Throws GenericityError if a reduced diagonal entry vanishes.
BandedMatrix build_Md(int d, const GR& lambda1, const GR& lambda2);

/// R with deg_w R <= 2d-3 and L_d(R) = P on every positive-degree monomial.
MPoly solve_Rd(const BandedMatrix& m, const MPoly& P);

/// F_d = L_d(R)(0) - P(0); verifies that L_d(R) - P is free of w.
MPoly functional_Fd(const BandedMatrix& m, const MPoly& P, const MPoly& R);

}  // namespace holocert
