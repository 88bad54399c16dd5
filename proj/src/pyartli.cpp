#include "holocert/pyartli.hpp"

#include "holocert/errors.hpp"
#include "holocert/normal_form.hpp"

namespace holocert {

GR BandedMatrix::reduced_diagonal(std::size_t k) const {
  return B - GR(static_cast<long>(2 * d - 2) - static_cast<long>(k));
}

std::vector<std::vector<GR>> BandedMatrix::reduced() const { return {entries.begin() + 1, entries.end()}; }

MPoly apply_Ld(int d, const GR& lambda1, const GR& lambda2, const MPoly& f) {
  const MPoly r = r_poly();
  const MPoly s = s_poly(lambda1, lambda2);
  return f.derivative(vars::w) * r + GR(d - 1) * (s - r.derivative(vars::w)) * f;
}

BandedMatrix build_Md(int d, const GR& lambda1, const GR& lambda2) {
  if (d < 2 || d > kMaxDegree) throw Error("build_Md: degree must lie in 2..6");
  BandedMatrix m;
  m.d = d;
  m.lambda1 = lambda1;
  m.lambda2 = lambda2;
  m.A = GR(d - 1) * (lambda2 - lambda1);
  m.B = GR(d - 1) * (lambda1 + lambda2);
  const auto rows = static_cast<std::size_t>(2 * d - 1);
  const auto cols = static_cast<std::size_t>(2 * d - 2);
  m.entries.assign(rows, std::vector<GR>(cols));
  for (std::size_t k = 0; k < cols; ++k) {
    if (k >= 1) m.entries[k - 1][k] = GR(-static_cast<long>(k));
    m.entries[k][k] = m.A;
    m.entries[k + 1][k] = m.reduced_diagonal(k);
  }

  const MPoly w = MPoly::variable(vars::w);
  for (std::size_t k = 0; k < cols; ++k) {
    const MPoly image = apply_Ld(d, lambda1, lambda2, w.pow(static_cast<unsigned>(k)));
    for (std::size_t row = 0; row < rows; ++row) {
      if (image.coeff(vars::w, static_cast<unsigned>(row)).constant_term() != m.entries[row][k]) {
        throw InternalError("build_Md: column " + std::to_string(k) + " disagrees with L_d(w^k)");
      }
    }
    if (m.reduced_diagonal(k).is_zero()) {
      throw GenericityError("L_" + std::to_string(d) + " is singular: B_d - " + std::to_string(2 * d - 2 - k) +
                            " = 0 (lambda3 in (1/" + std::to_string(d - 1) + ")Z)");
    }
  }
  return m;
}

MPoly solve_Rd(const BandedMatrix& m, const MPoly& P) {
  const unsigned top = static_cast<unsigned>(2 * m.d - 2);
  if (P.degree(vars::w) > top) {
    throw Error("solve_Rd: deg_w P_" + std::to_string(m.d) + " = " + std::to_string(P.degree(vars::w)) +
                " exceeds " + std::to_string(top));
  }
  const std::vector<MPoly> pc = P.coefficients(vars::w);
  auto p_at = [&](std::size_t j) { return j < pc.size() ? pc[j] : MPoly(); };

  // Row w^{k+1}: (B - (2d-2-k)) x_k + A x_{k+1} - (k+2) x_{k+2} = p_{k+1}.
  const std::size_t n = m.cols();
  std::vector<MPoly> x(n + 2);
  for (std::size_t k = n; k-- > 0;) {
    MPoly rhs = p_at(k + 1) - MPoly(m.A) * x[k + 1] + MPoly(GR(static_cast<long>(k + 2))) * x[k + 2];
    x[k] = rhs / m.reduced_diagonal(k);
  }
  x.resize(n);
  return MPoly::from_coefficients(vars::w, x);
}

MPoly functional_Fd(const BandedMatrix& m, const MPoly& P, const MPoly& R) {
  const MPoly defect = apply_Ld(m.d, m.lambda1, m.lambda2, R) - P;
  if (defect.has_var(vars::w)) {
    throw InternalError("functional_Fd: L_" + std::to_string(m.d) + "(R) - P depends on w: " + defect.to_string());
  }
  const MPoly F = MPoly(m.A) * R.coeff(vars::w, 0) - R.coeff(vars::w, 1) - P.coeff(vars::w, 0);
  if (F != defect) throw InternalError("functional_Fd: constant defect disagrees with L_d(R)(0) - P(0)");
  return F;
}

}  // namespace holocert
