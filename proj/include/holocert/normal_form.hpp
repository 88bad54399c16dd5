#pragma once

#include <array>
#include <string>
#include <vector>

#include "holocert/gaussian_rational.hpp"
#include "holocert/mpoly.hpp"

namespace holocert {

inline constexpr int kMaxDegree = 6;

/// Normalized quadratic foliation.  lambda1, lambda2 are the characteristic
/// numbers at w = -1 and w = +1; lambda3 = 1 - lambda1 - lambda2 is derived.
struct FoliationParams {
  GR lambda1;
  GR lambda2;
  GR alpha0;
  GR alpha1;
  GR alpha2;

  GR lambda3() const { return GR(1) - lambda1 - lambda2; }
  GR sigma() const { return lambda1 + lambda2; }
  GR eta() const { return alpha1 + alpha2; }
};

struct GenericityCheck {
  std::string name;
  bool pass = true;
  /// Checks that are only proxied numerically do not gate the exact pipeline.
  bool numeric_proxy = false;
  std::string detail;
};

struct GenericityReport {
  std::vector<GenericityCheck> checks;
  /// Re l1 >= Re l2 >= Re l3 (ties by Im); recorded only.
  bool ordering_convention = true;

  /// All exact checks pass.
  bool exact_pass() const;
  /// Names and details of failing exact checks, joined for diagnostics.
  std::string failures() const;
};

/// Never throws.
GenericityReport validate_genericity(const FoliationParams& p);

/// Throws GenericityError listing the failures when an exact check fails.
void require_generic(const FoliationParams& p);

/// Expansion data K_d = c_d K_1 + S_d / r^d for d <= 6.
///
/// The alpha parameters are polynomials so the same code serves the
/// numeric case (constants) and the symbolic beta copy (beta0, beta1, beta2).
struct NormalFormExpansion {
  GR lambda1;
  GR lambda2;
  MPoly alpha0;
  MPoly alpha1;
  MPoly alpha2;
  MPoly r;
  MPoly s;
  MPoly p;
  /// Indexed by d; c[0] and S[0] unused, c[1] = 1, S[1] = 0.
  std::array<MPoly, kMaxDegree + 1> c;
  std::array<MPoly, kMaxDegree + 1> S;

  GR sigma() const { return lambda1 + lambda2; }
  /// Numeric c_d; throws if it still depends on a variable.
  GR c_value(int d) const { return c.at(static_cast<std::size_t>(d)).constant_value(); }
};

NormalFormExpansion expand_normal_form(const FoliationParams& p);
NormalFormExpansion expand_normal_form(const GR& lambda1, const GR& lambda2, const MPoly& alpha0, const MPoly& alpha1,
                                       const MPoly& alpha2);
/// Same characteristic numbers, alpha replaced by the variables beta0, beta1, beta2.
NormalFormExpansion expand_symbolic_beta(const FoliationParams& p);

/// K_d = numerator / r^d.
struct SeriesCoefficient {
  MPoly numerator;
  unsigned r_power = 0;
};

/// Independent expansion of Psi(z, w) by geometric-series inversion of the
/// denominator.  Entry d holds K_d for 1 <= d <= dmax; entry 0 is zero.
std::vector<SeriesCoefficient> series_oracle(const FoliationParams& p, int dmax);

MPoly r_poly();
MPoly s_poly(const GR& lambda1, const GR& lambda2);
MPoly p_poly(const MPoly& alpha1, const MPoly& alpha2);

}  // namespace holocert
