#pragma once

#include <string>
#include <vector>

#include "holocert/mpoly.hpp"

namespace holocert {

/// Sylvester matrix of f and g in `var`, coefficients in descending powers.
/// Rows 0..deg g-1 carry shifts of f, the remaining rows shifts of g.
std::vector<std::vector<MPoly>> sylvester_matrix(const MPoly& f, const MPoly& g, const std::string& var);

/// Determinant by fraction-free Bareiss elimination; row swaps on zero pivots.
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m);

/// Res_var(f, g).  Degrees are read from the actual terms, so vanishing
/// nominal leads are never seen.  If exactly one argument is constant in
/// var the result is that constant raised to the other degree.
MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var);

}  // namespace holocert
