#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "holocert/errors.hpp"
#include "holocert/holonomy.hpp"
#include "holocert/pyartli.hpp"
#include "holocert/variation.hpp"

namespace holocert {

namespace {

double formula_tolerance(int degree) {
  if (degree <= 3) return 1e-6;
  if (degree <= 5) return 1e-5;
  return 1e-4;
}

struct TermSum {
  cd sum{};
  double scale = 0.0;
  void add(cd t) {
    sum += t;
    scale += std::abs(t);
  }
};

CheckResult make_check(std::string name, std::string loop, int degree, double residual, double tol,
                       std::string note = "") {
  CheckResult c{std::move(name), std::move(loop), degree, residual, tol, false, std::move(note)};
  c.pass = std::isfinite(residual) && residual < tol;
  return c;
}

double relative(cd a, cd b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

std::array<cd, kJetOrder + 1> predicted_coefficients(const FloatModel& m, const QuadratureBundle& b,
                                                     const HolonomyJet& jet, std::array<double, kJetOrder + 1>* scale) {
  const cd c2 = m.c[2];
  const cd c3 = m.c[3];
  const cd c4 = m.c[4];
  const cd c5 = m.c[5];
  const cd a2 = jet[2];
  const cd a3 = jet[3];
  const cd a4 = jet[4];
  const cd a5 = jet[5];
  const cd psi3 = b["psi3"];
  std::array<TermSum, kJetOrder + 1> t{};

  t[2].add(b["psi2"]);

  t[3].add(a2 * a2);
  t[3].add(psi3);

  t[4].add(2.0 * a3 * a2);
  t[4].add(-std::pow(a2, 3));
  t[4].add(c3 / 2.0 * a2);
  t[4].add(-c2 * psi3);
  t[4].add(b["Delta1"]);
  t[4].add(b["psi4"]);

  t[5].add(2.0 * a4 * a2);
  t[5].add(1.5 * a3 * a3);
  t[5].add(-4.0 * a3 * a2 * a2);
  t[5].add(1.5 * std::pow(a2, 4));
  t[5].add(c3 / 2.0 * a2 * a2);
  t[5].add((2.0 * c4 - c3 * c2) / 3.0 * a2);
  t[5].add(c2 * c2 * psi3);
  t[5].add(-2.0 * c2 * b["psi4"]);
  t[5].add(-2.0 * c2 * b["Delta1"]);
  t[5].add(b["Delta2"]);
  t[5].add(2.0 * b["Gamma1"]);
  t[5].add(b["psi5"]);

  t[6].add(2.0 * a5 * a2);
  t[6].add(3.0 * a4 * a3);
  t[6].add(-4.0 * a4 * a2 * a2);
  t[6].add(-5.0 * a3 * a3 * a2);
  t[6].add(7.0 * a3 * std::pow(a2, 3));
  t[6].add(-2.0 * std::pow(a2, 5));
  t[6].add(c3 / 2.0 * std::pow(a2, 3));
  t[6].add((c4 - c3 * c2 / 2.0) * a2 * a2);
  t[6].add((0.75 * c5 - c4 * c2 / 2.0 - c3 * c3 / 8.0 + c3 * c2 * c2 / 4.0 + c3 / 2.0 * psi3) * a2);
  t[6].add(-c2 / 2.0 * psi3 * psi3);
  t[6].add((c4 / 3.0 + c3 * c2 / 3.0 - std::pow(c2, 3)) * psi3);
  t[6].add((-c3 / 2.0 + 3.0 * c2 * c2) * b["Delta1"]);
  t[6].add(-3.0 * c2 * b["Delta2"]);
  t[6].add(b["Delta3"]);
  t[6].add(b["Delta11"]);
  t[6].add((-c3 / 2.0 + 3.0 * c2 * c2) * b["psi4"]);
  t[6].add(-6.0 * c2 * b["Gamma1"]);
  t[6].add(3.0 * b["Gamma2"]);
  t[6].add(b["Gamma01"]);
  t[6].add(-3.0 * c2 * b["psi5"]);
  t[6].add(3.0 * b["B1"]);
  t[6].add(b["psi6"]);

  std::array<cd, kJetOrder + 1> out{};
  for (int d = 2; d <= kJetOrder; ++d) {
    out[d] = t[d].sum;
    if (scale) (*scale)[d] = t[d].scale;
  }
  return out;
}

std::vector<CheckResult> verify_variation_formulas(const FloatModel& m, const LoopSet& loops, int j,
                                                   const IntegratorOptions& opts, const std::string& tag) {
  if (j != 1 && j != 2) throw Error("verify_variation_formulas: loop index must be 1 or 2");
  const Loop& loop = j == 1 ? loops.gamma1 : loops.gamma2;
  const HolonomyJet jet = integrate_variations(m, loop, kJetOrder, opts);
  const QuadratureBundle b = integrate_quadratures(m, loop, opts);
  std::array<double, kJetOrder + 1> scale{};
  const auto pred = predicted_coefficients(m, b, jet, &scale);
  std::vector<CheckResult> out;
  for (int d = 2; d <= kJetOrder; ++d) {
    const double res = std::abs(jet[d] - pred[d]) / (std::abs(jet[d]) + scale[d]);
    out.push_back(make_check("variation_formula", loop.label, d, res, formula_tolerance(d), tag));
  }
  return out;
}

namespace {

cd random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

GR random_gr(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> k(lo, hi);
  const long re = k(rng);
  const long im = k(rng);
  return {mpq_class(re, den), mpq_class(im, den)};
}

struct LoopIntegral {
  cd value;
  double abs_norm;
};

// (P, zeta) integral with zeta' = (u1/(1+w) - u2/(1-w)) zeta, zeta(0) = 1.
LoopIntegral integrate_zeta(const CPoly& P, cd u1, cd u2, const Loop& loop, const IntegratorOptions& opts) {
  auto rhs = [&](cd w, cd dw, const State& y, State& dy) {
    const cd f = P(w) * y[0];
    dy[0] = (u1 / (1.0 + w) - u2 / (1.0 - w)) * y[0] * dw;
    dy[1] = f * dw;
    dy[2] = std::abs(f) * std::abs(dw);
  };
  const State end = integrate_path(loop, rhs, State{1.0, 0.0, 0.0}, opts).back();
  return {end[1], end[2].real()};
}

// P / r^d phi1^{d-1} integrated with vertex states [phi1, I, |I|].
std::vector<State> integrate_weighted(const FloatModel& m, const CPoly& P, int d, const Loop& loop,
                                      const IntegratorOptions& opts) {
  auto rhs = [&](cd w, cd dw, const State& y, State& dy) {
    const cd r = w * w - 1.0;
    const cd f = P(w) / std::pow(r, d) * std::pow(y[0], d - 1);
    dy[0] = m.K(1, w) * y[0] * dw;
    dy[1] = f * dw;
    dy[2] = std::abs(f) * std::abs(dw);
  };
  return integrate_path(loop, rhs, State{1.0, 0.0, 0.0}, opts);
}

MPoly random_poly_w(std::mt19937_64& rng, unsigned degree) {
  std::vector<MPoly> coeffs;
  for (unsigned k = 0; k <= degree; ++k) coeffs.emplace_back(random_gr(rng, -8, 8, 4));
  return MPoly::from_coefficients(vars::w, coeffs);
}

// Antiderivative identity at every vertex of `loop`:
//   int_0^w L/r^d phi1^{d-1} = R(w)/r(w)^{d-1} phi1(w)^{d-1} - (-1)^{d-1} R(0).
CheckResult antiderivative_check(const FloatModel& m, const MPoly& image, const MPoly& R, int d, const Loop& loop,
                                 const IntegratorOptions& opts, const std::string& note) {
  const CPoly P = to_cpoly(image);
  const CPoly Rf = to_cpoly(R);
  const cd C = -std::pow(-1.0, d - 1) * Rf(0.0);
  const std::vector<State> states = integrate_weighted(m, P, d, loop, opts);
  double worst = 0.0;
  cd w = loop.basepoint;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (k > 0) w = loop.segments[k - 1].end();
    const State& y = states[k];
    const cd anti = Rf(w) / std::pow(w * w - 1.0, d - 1) * std::pow(y[0], d - 1);
    const double scale = y[2].real() + std::abs(anti) + std::abs(C);
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(y[1] - (anti + C)) / scale);
  }
  return make_check("antiderivative_identity", loop.label, d, worst, 1e-6, note);
}

}  // namespace

std::vector<CheckResult> verify_integral_lemmas(const FoliationParams& p, const LoopSet& loops, unsigned seed,
                                                int samples, const IntegratorOptions& opts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_d(3, kMaxDegree);
  const FloatModel m = make_float_model(p);
  const cd l1 = m.lambda1;
  const cd l2 = m.lambda2;
  std::vector<CheckResult> out;

  for (int k = 0; k < samples; ++k) {
    const int d = pick_d(rng);
    CPoly P;
    for (int i = 0; i <= 2 * d - 2; ++i) P.c.push_back(random_complex(rng));
    const cd u1 = static_cast<double>(d - 1) * l1 - static_cast<double>(d);
    const cd u2 = static_cast<double>(d - 1) * l2 - static_cast<double>(d);
    const cd nu = std::exp(cd{0.0, 2.0 * std::numbers::pi} * u1);
    const LoopIntegral i1 = integrate_zeta(P, u1, u2, loops.gamma1, opts);
    const LoopIntegral i2 = integrate_zeta(P, u1, u2, loops.gamma2, opts);
    const double res = std::abs(i2.value - (1.0 + nu) * i1.value) / (i2.abs_norm + std::abs(1.0 + nu) * i1.abs_norm);
    out.push_back(make_check("integrals_gamma2_vs_gamma1", "gamma2", d, res, 1e-6, "sample " + std::to_string(k)));
  }

  for (int k = 0; k < samples; ++k) {
    const int d = pick_d(rng);
    const MPoly R = random_poly_w(rng, static_cast<unsigned>(2 * d - 3));
    const CPoly P = to_cpoly(apply_Ld(d, p.lambda1, p.lambda2, R));
    const State end = integrate_weighted(m, P, d, loops.gamma1, opts).back();
    out.push_back(make_check("pyartli_image_integrates_to_zero", "gamma1", d, std::abs(end[1]) / end[2].real(), 1e-6,
                             "sample " + std::to_string(k)));
  }

  // Antiderivatives for the condition polynomials at a numeric beta, and for planted images.
  const NormalFormExpansion ea = expand_normal_form(p);
  const FoliationParams beta = random_alpha(rng, p);
  const NormalFormExpansion eb = expand_normal_form(beta);
  const ConditionSet cs = build_conditions(ea, eb);
  for (int d = 3; d <= kMaxDegree; ++d) {
    const MPoly image = cs.P.at(d) + cs.F.at(d);
    out.push_back(antiderivative_check(m, image, cs.R.at(d), d, loops.gamma1, opts, "condition polynomial"));
    const MPoly R = random_poly_w(rng, static_cast<unsigned>(2 * d - 3));
    out.push_back(antiderivative_check(m, apply_Ld(d, p.lambda1, p.lambda2, R), R, d, loops.mu1.then(loops.mu2), opts,
                                       "planted R"));
  }
  return out;
}

StructuralResult structural_checks(const FoliationParams& p, double radius, const IntegratorOptions& opts) {
  StructuralResult out;
  const FloatModel m = make_float_model(p);
  const LoopSet loops = build_loops(radius);
  const double other_radius = std::abs(radius - 1.0 / 3.0) < 1e-9 ? 0.5 : 1.0 / 3.0;
  const LoopSet alt = build_loops(other_radius);

  const HolonomyJet mu1 = integrate_variations(m, loops.mu1, kJetOrder, opts);
  const HolonomyJet mu2 = integrate_variations(m, loops.mu2, kJetOrder, opts);
  const HolonomyJet mu1i = integrate_variations(m, loops.mu1.reversed(), kJetOrder, opts);
  const HolonomyJet mu2i = integrate_variations(m, loops.mu2.reversed(), kJetOrder, opts);
  const HolonomyJet g1 = integrate_variations(m, loops.gamma1, kJetOrder, opts);
  const HolonomyJet g2 = integrate_variations(m, loops.gamma2, kJetOrder, opts);

  for (const HolonomyJet* g : {&g1, &g2}) {
    out.checks.push_back(make_check("commutator_linear_part", g->label, 1, std::abs(g->a[1] - 1.0), 1e-8));
  }

  const std::vector<std::pair<const Loop*, const HolonomyJet*>> base{
      {&loops.mu1, &mu1}, {&loops.mu2, &mu2}, {&loops.gamma1, &g1}, {&loops.gamma2, &g2}};
  const std::vector<const Loop*> alt_loops{&alt.mu1, &alt.mu2, &alt.gamma1, &alt.gamma2};
  for (std::size_t k = 0; k < base.size(); ++k) {
    const auto& [loop, jet] = base[k];
    const HolonomyJet rev = k == 0 ? mu1i : k == 1 ? mu2i : integrate_variations(m, loop->reversed(), kJetOrder, opts);
    out.checks.push_back(make_check("reversed_loop_inverse_jet", loop->label, kJetOrder, jet_distance(rev, invert(*jet)),
                                    1e-7));
    const HolonomyJet other = integrate_variations(m, *alt_loops[k], kJetOrder, opts);
    out.checks.push_back(make_check("radius_independence", loop->label, kJetOrder, jet_distance(other, *jet), 1e-7,
                                    "radius " + std::to_string(radius) + " vs " + std::to_string(other_radius)));
  }

  const HolonomyJet null = integrate_variations(m, loops.mu1.then(loops.mu1.reversed()), kJetOrder, opts);
  out.checks.push_back(
      make_check("null_homotopic_identity", "mu1.mu1^-1", kJetOrder, jet_distance(null, HolonomyJet::identity()), 1e-7));

  // Path a then b: either D_b o D_a (right action) or D_a o D_b.
  const HolonomyJet right = compose(mu1i, compose(mu2i, compose(mu1, mu2)));
  const HolonomyJet left = compose(mu2, compose(mu1, compose(mu2i, mu1i)));
  // Envelope-normalized distances are too forgiving to separate the two
  // candidates, so the raw coefficient distance decides and the envelope
  // distance of the winner is what must meet the tolerance.
  const double raw_right = coefficient_distance(g1, right);
  const double raw_left = coefficient_distance(g1, left);
  const bool right_wins = raw_right <= raw_left;
  out.convention = right_wins ? "path ab has holonomy D_b o D_a" : "path ab has holonomy D_a o D_b";
  const double winner = jet_distance(g1, right_wins ? right : left);
  const double margin = std::min(raw_right, raw_left) / std::max(std::max(raw_right, raw_left), 1e-300);
  std::ostringstream note;
  note << std::scientific << std::setprecision(3) << "raw D_b o D_a: " << raw_right << ", raw D_a o D_b: " << raw_left;
  if (margin >= 1e-3) note << ", candidates not separated";
  out.checks.push_back(make_check("composition_convention", "gamma1", kJetOrder, margin < 1e-3 ? winner : 1.0, 1e-7,
                                  note.str()));
  const HolonomyJet g2_composed =
      right_wins ? compose(mu1i, compose(mu1i, compose(mu2i, compose(mu1, compose(mu1, mu2)))))
                 : compose(mu2, compose(mu1, compose(mu1, compose(mu2i, compose(mu1i, mu1i)))));
  out.checks.push_back(make_check("concatenation_composition", "gamma2", kJetOrder, jet_distance(g2, g2_composed), 1e-7));
  out.checks.push_back(make_check("commutator_of_generators", "gamma1", kJetOrder,
                                  jet_distance(g1, right_wins ? commutator(mu1i, mu2i) : commutator(mu2, mu1)), 1e-7));

  // Winding numbers of the constructed loops.
  const auto wind = [](const Loop& l) {
    return std::to_string(l.winding_number({-1.0, 0.0})) + "," + std::to_string(l.winding_number({1.0, 0.0}));
  };
  const bool windings_ok = wind(loops.mu1) == "1,0" && wind(loops.mu2) == "0,1" && wind(loops.gamma1) == "0,0" &&
                           wind(loops.gamma2) == "0,0";
  out.checks.push_back(make_check("winding_numbers", "all", 0, windings_ok ? 0.0 : 1.0, 0.5,
                                  "mu1 " + wind(loops.mu1) + " mu2 " + wind(loops.mu2) + " gamma1 " +
                                      wind(loops.gamma1) + " gamma2 " + wind(loops.gamma2)));

  // Numeric proxy for a nonzero quadratic term, and the a22 / a21 ratio.
  out.checks.push_back(make_check("a21_nonzero", "gamma1", 2, 1e-6 / std::max(std::abs(g1[2]), 1e-300), 1.0,
                                  "|a21| = " + std::to_string(std::abs(g1[2]))));
  const cd ratio = g2[2] / g1[2];
  out.checks.push_back(make_check("a22_over_a21", "gamma2", 2, relative(ratio, 1.0 + m.nu1()), 1e-6,
                                  "nu1 = " + std::to_string(m.nu1().real()) + "+" + std::to_string(m.nu1().imag()) + "i"));

  // The quadratic coefficient does not see alpha, nor the tilde parameters.
  std::mt19937_64 rng(12345);
  const FoliationParams other_alpha = random_alpha(rng, p);
  const FloatModel mb = make_float_model(other_alpha);
  for (const Loop* l : {&loops.gamma1, &loops.gamma2}) {
    const QuadratureBundle qa = integrate_quadratures(m, *l, opts);
    const QuadratureBundle qb = integrate_quadratures(mb, *l, opts);
    out.checks.push_back(make_check("psi2_independent_of_alpha", l->label, 2, relative(qa["psi2"], qb["psi2"]), 1e-7));
    const HolonomyJet ja = l == &loops.gamma1 ? g1 : g2;
    const HolonomyJet jb = integrate_variations(mb, *l, 2, opts);
    out.checks.push_back(make_check("a2_independent_of_beta", l->label, 2, relative(ja[2], jb[2]), 1e-7));
  }

  // Reduced matrices of the Pyartli map are triangular with nonzero diagonal.
  for (int d = 3; d <= kMaxDegree; ++d) {
    bool ok = true;
    try {
      const BandedMatrix bm = build_Md(d, p.lambda1, p.lambda2);
      const auto red = bm.reduced();
      for (std::size_t i = 0; i < red.size(); ++i) {
        for (std::size_t j = 0; j < red[i].size(); ++j) {
          if (i > j && !red[i][j].is_zero()) ok = false;
          if (i == j && red[i][j].is_zero()) ok = false;
        }
      }
    } catch (const GenericityError&) {
      ok = false;
    }
    out.checks.push_back(make_check("reduced_matrix_triangular", "exact", d, ok ? 0.0 : 1.0, 0.5));
  }
  return out;
}

bool NumericReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

FoliationParams random_params(std::mt19937_64& rng) {
  FoliationParams p;
  // Real parts in [-1, 1], imaginary parts in [-1/2, 1/2], denominators 8.
  std::uniform_int_distribution<long> re(-8, 8);
  std::uniform_int_distribution<long> im(-4, 4);
  for (;;) {
    p.lambda1 = GR(mpq_class(re(rng), 8), mpq_class(im(rng), 8));
    p.lambda2 = GR(mpq_class(re(rng), 8), mpq_class(im(rng), 8));
    p.alpha0 = random_gr(rng, -8, 8, 8);
    p.alpha1 = random_gr(rng, -8, 8, 8);
    p.alpha2 = random_gr(rng, -8, 8, 8);
    if (validate_genericity(p).exact_pass()) return p;
  }
}

FoliationParams random_alpha(std::mt19937_64& rng, const FoliationParams& base) {
  FoliationParams p = base;
  p.alpha0 = base.alpha0 + random_gr(rng, -4, 4, 8);
  p.alpha1 = base.alpha1 + random_gr(rng, -4, 4, 8);
  p.alpha2 = base.alpha2 + random_gr(rng, -4, 4, 8);
  return p;
}

NumericReport run_numeric_checks(const FoliationParams& p, const NumericConfig& cfg) {
  IntegratorOptions opts;
  opts.rtol = cfg.rtol;
  const LoopSet loops = build_loops(cfg.radius);
  NumericReport rep;
  auto append = [&rep](std::vector<CheckResult> v) { rep.checks.insert(rep.checks.end(), v.begin(), v.end()); };

  const FloatModel m = make_float_model(p);
  for (int j = 1; j <= 2; ++j) append(verify_variation_formulas(m, loops, j, opts, "given parameters"));
  std::mt19937_64 rng(cfg.seed);
  for (int k = 0; k < cfg.random_sets; ++k) {
    const FloatModel mk = make_float_model(random_params(rng));
    for (int j = 1; j <= 2; ++j) append(verify_variation_formulas(mk, loops, j, opts, "random set " + std::to_string(k)));
  }
  append(verify_integral_lemmas(p, loops, cfg.seed, cfg.lemma_samples, opts));
  StructuralResult st = structural_checks(p, cfg.radius, opts);
  append(std::move(st.checks));
  rep.convention = st.convention;
  return rep;
}

nlohmann::json check_to_json(const CheckResult& c) {
  nlohmann::json j = {{"name", c.name},           {"loop", c.loop}, {"degree", c.degree},
                      {"residual", c.residual},   {"tolerance", c.tolerance}, {"pass", c.pass}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

nlohmann::json report_to_json(const NumericReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return {{"checks", checks}, {"convention", r.convention}, {"all_pass", r.all_pass()}};
}

}  // namespace holocert
