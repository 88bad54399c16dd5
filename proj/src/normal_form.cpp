#include "holocert/normal_form.hpp"

#include <sstream>

namespace holocert {

namespace {

const MPoly& w_var() {
  static const MPoly w = MPoly::variable(vars::w);
  return w;
}

// z in (1/k)Z for some k in {3, 4, 5}.
bool in_forbidden_lattice(const GR& z, int* which) {
  if (!z.is_real()) return false;
  for (int k : {3, 4, 5}) {
    if ((GR(k) * z).is_integer()) {
      *which = k;
      return true;
    }
  }
  return false;
}

bool re_then_im_geq(const GR& a, const GR& b) {
  if (a.re() != b.re()) return a.re() > b.re();
  return a.im() >= b.im();
}

}  // namespace

bool GenericityReport::exact_pass() const {
  for (const auto& c : checks) {
    if (!c.numeric_proxy && !c.pass) return false;
  }
  return true;
}

std::string GenericityReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.numeric_proxy || c.pass) continue;
    if (!out.empty()) out += "; ";
    out += c.name + ": " + c.detail;
  }
  return out;
}

GenericityReport validate_genericity(const FoliationParams& p) {
  GenericityReport rep;
  const std::array<GR, 3> l{p.lambda1, p.lambda2, p.lambda3()};
  const std::array<const char*, 3> names{"lambda1", "lambda2", "lambda3"};

  GenericityCheck distinct{"distinct_lambdas", true, false, ""};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (l[i] == l[j]) {
        distinct.pass = false;
        distinct.detail += std::string(distinct.detail.empty() ? "" : ", ") + names[i] + " = " + names[j] + " = " +
                           l[i].to_string();
      }
    }
  }
  rep.checks.push_back(distinct);

  for (int i = 0; i < 3; ++i) {
    GenericityCheck c{std::string(names[i]) + "_not_in_lattice", true, false, ""};
    int k = 0;
    if (in_forbidden_lattice(l[i], &k)) {
      c.pass = false;
      c.detail = std::string(names[i]) + " = " + l[i].to_string() + " lies in (1/" + std::to_string(k) + ")Z";
    }
    rep.checks.push_back(c);
  }

  rep.checks.push_back({"nonsolvable_holonomy", true, true, "numeric proxy: nonlinear jet of the commutator holonomy"});
  rep.checks.push_back({"nonzero_quadratic_term", true, true, "numeric proxy: |a2 along gamma1| > 1e-6"});

  rep.ordering_convention = re_then_im_geq(l[0], l[1]) && re_then_im_geq(l[1], l[2]);
  return rep;
}

void require_generic(const FoliationParams& p) {
  const GenericityReport rep = validate_genericity(p);
  if (!rep.exact_pass()) throw GenericityError("parameters are not generic: " + rep.failures());
}

MPoly r_poly() { return w_var() * w_var() - 1; }

MPoly s_poly(const GR& lambda1, const GR& lambda2) {
  return MPoly(lambda1) * (w_var() - 1) + MPoly(lambda2) * (w_var() + 1);
}

MPoly p_poly(const MPoly& alpha1, const MPoly& alpha2) { return alpha1 * (w_var() - 1) + alpha2 * (w_var() + 1); }

NormalFormExpansion expand_normal_form(const GR& lambda1, const GR& lambda2, const MPoly& alpha0, const MPoly& alpha1,
                                       const MPoly& alpha2) {
  NormalFormExpansion e;
  e.lambda1 = lambda1;
  e.lambda2 = lambda2;
  e.alpha0 = alpha0;
  e.alpha1 = alpha1;
  e.alpha2 = alpha2;
  e.r = r_poly();
  e.s = s_poly(lambda1, lambda2);
  e.p = p_poly(alpha1, alpha2);

  const MPoly sg(lambda1 + lambda2);
  const MPoly one_minus(GR(1) - lambda1 - lambda2);
  const MPoly eta = alpha1 + alpha2;
  const MPoly& a0 = alpha0;
  const MPoly& r = e.r;
  const MPoly& s = e.s;
  const MPoly& p = e.p;
  const MPoly a0s = a0 * sg;

  e.c[1] = MPoly(1);
  e.c[2] = a0 * one_minus;
  e.c[3] = -(a0.pow(2) * sg * one_minus);
  e.c[4] = a0.pow(3) * sg.pow(2) * one_minus;
  e.c[5] = -(a0.pow(4) * sg.pow(3) * one_minus);
  e.c[6] = a0.pow(5) * sg.pow(4) * one_minus;

  const MPoly r2 = r * r;
  const MPoly r3 = r2 * r;
  const MPoly r4 = r3 * r;
  const MPoly r5 = r4 * r;
  const MPoly sp = s * p;
  const MPoly spp = sp * p;

  e.S[1] = MPoly();
  e.S[2] = r;
  e.S[3] = -(sp * r) + (eta - a0s) * r2;
  e.S[4] = -(p * r2) + a0 * (2 * sg - 1) * sp * r2 + a0s * (a0s - eta) * r3;
  e.S[5] = spp * r2 + (2 * a0s - eta) * p * r3 + a0.pow(2) * sg * (2 - 3 * sg) * sp * r3 +
           a0.pow(2) * sg.pow(2) * (eta - a0s) * r4;
  e.S[6] = p * p * r3 + a0 * (1 - 3 * sg) * spp * r3 + (2 * a0s * eta - 3 * a0s.pow(2)) * p * r4 -
           a0.pow(3) * sg.pow(2) * (3 - 4 * sg) * sp * r4 + a0.pow(3) * sg.pow(3) * (a0s - eta) * r5;
  return e;
}

NormalFormExpansion expand_normal_form(const FoliationParams& p) {
  return expand_normal_form(p.lambda1, p.lambda2, MPoly(p.alpha0), MPoly(p.alpha1), MPoly(p.alpha2));
}

NormalFormExpansion expand_symbolic_beta(const FoliationParams& p) {
  return expand_normal_form(p.lambda1, p.lambda2, MPoly::variable(vars::beta0), MPoly::variable(vars::beta1),
                            MPoly::variable(vars::beta2));
}

std::vector<SeriesCoefficient> series_oracle(const FoliationParams& prm, int dmax) {
  if (dmax < 1 || dmax > kMaxDegree) throw Error("series_oracle: dmax must lie in 1..6");
  const MPoly r = r_poly();
  const MPoly s = s_poly(prm.lambda1, prm.lambda2);
  const MPoly p = p_poly(MPoly(prm.alpha1), MPoly(prm.alpha2));
  const MPoly a0(prm.alpha0);
  const MPoly a0s(prm.alpha0 * prm.sigma());
  const MPoly eta(prm.eta());

  // 1 / (1 + a0 sigma z + (p/r) z^2) = sum N_k / r^k z^k.
  std::vector<MPoly> n(static_cast<std::size_t>(dmax));
  n[0] = MPoly(1);
  for (std::size_t k = 1; k < n.size(); ++k) {
    n[k] = -(a0s * r * n[k - 1]);
    if (k >= 2) n[k] -= p * r * n[k - 2];
  }

  // Psi = (z/r)(s + (a0 s + 1) z + eta z^2) * G.
  const std::array<MPoly, 3> top{s, a0 * s + 1, eta};
  std::vector<SeriesCoefficient> out(static_cast<std::size_t>(dmax) + 1);
  for (int d = 1; d <= dmax; ++d) {
    MPoly num;
    MPoly rpow(1);
    for (int j = 0; j < 3 && d - 1 - j >= 0; ++j) {
      num += top[static_cast<std::size_t>(j)] * rpow * n[static_cast<std::size_t>(d - 1 - j)];
      rpow *= r;
    }
    out[static_cast<std::size_t>(d)] = {num, static_cast<unsigned>(d)};
  }
  return out;
}

}  // namespace holocert
