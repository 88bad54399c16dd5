#include <gtest/gtest.h>

#include <numbers>

#include "holocert/holonomy.hpp"

using namespace holocert;

namespace {

FoliationParams test_point() {
  return {GR::parse("2-1i"), GR::parse("0+2i"), GR(1), GR(0), GR(0)};
}

const cd I2PI{0.0, 2.0 * std::numbers::pi};

double rel(cd a, cd b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

Loop open_path(cd to) {
  Loop l;
  l.label = "line";
  l.segments.push_back(Segment::line(0.0, to));
  return l;
}

// Variations with the reduced-variation integrands written out term by term.
HolonomyJet explicit_jet(const FloatModel& m, const Loop& loop, const IntegratorOptions& opts) {
  auto rhs = [&m](cd w, cd dw, const State& y, State& dy) {
    const cd f = y[0];
    const cd p2 = y[1], p3 = y[2], p4 = y[3], p5 = y[4];
    const cd k2 = m.K(2, w), k3 = m.K(3, w), k4 = m.K(4, w), k5 = m.K(5, w), k6 = m.K(6, w);
    const cd f2 = f * f, f3 = f2 * f, f4 = f3 * f, f5 = f4 * f;
    dy[0] = m.K(1, w) * f;
    dy[1] = k2 * f;
    dy[2] = 2.0 * k2 * p2 * f + k3 * f2;
    dy[3] = k2 * (2.0 * p3 * f + p2 * p2 * f) + 3.0 * k3 * p2 * f2 + k4 * f3;
    dy[4] = 2.0 * k2 * (p4 * f + p3 * p2 * f) + 3.0 * k3 * (p3 * f2 + p2 * p2 * f2) + 4.0 * k4 * p2 * f3 + k5 * f4;
    dy[5] = k2 * (2.0 * p5 * f + 2.0 * p4 * p2 * f + p3 * p3 * f) +
            k3 * (3.0 * p4 * f2 + 6.0 * p3 * p2 * f2 + p2 * p2 * p2 * f2) + k4 * (4.0 * p3 * f3 + 6.0 * p2 * p2 * f3) +
            5.0 * k5 * p2 * f4 + k6 * f5;
    for (auto& v : dy) v *= dw;
  };
  State y0(6, cd{});
  y0[0] = 1.0;
  const State end = integrate_path(loop, rhs, y0, opts).back();
  HolonomyJet j;
  j[1] = end[0];
  for (int d = 2; d <= 6; ++d) j[d] = end[0] * end[static_cast<std::size_t>(d - 1)];
  return j;
}

}  // namespace

TEST(Loops, WindingNumbersAndBasepoint) {
  const LoopSet l = build_loops(0.5);
  EXPECT_EQ(l.mu1.winding_number({-1, 0}), 1);
  EXPECT_EQ(l.mu1.winding_number({1, 0}), 0);
  EXPECT_EQ(l.mu2.winding_number({-1, 0}), 0);
  EXPECT_EQ(l.mu2.winding_number({1, 0}), 1);
  for (const Loop* g : {&l.gamma1, &l.gamma2}) {
    EXPECT_EQ(g->winding_number({-1, 0}), 0);
    EXPECT_EQ(g->winding_number({1, 0}), 0);
  }
  for (const Loop* g : {&l.mu1, &l.mu2, &l.gamma1, &l.gamma2}) {
    EXPECT_LT(std::abs(g->segments.front().start()), 1e-15);
    EXPECT_LT(std::abs(g->segments.back().end()), 1e-12);
    for (std::size_t k = 1; k < g->segments.size(); ++k)
      EXPECT_LT(std::abs(g->segments[k].start() - g->segments[k - 1].end()), 1e-12);
    EXPECT_NEAR(std::min(g->distance_to({-1, 0}), g->distance_to({1, 0})), 0.5, 1e-12);
  }
  EXPECT_EQ(l.mu1.reversed().winding_number({-1, 0}), -1);
  EXPECT_NEAR(l.gamma1.length(), 2 * l.mu1.length() + 2 * l.mu2.length(), 1e-12);
}

TEST(Loops, RadiusRange) {
  EXPECT_THROW(build_loops(0.0), Error);
  EXPECT_THROW(build_loops(1.0), Error);
  EXPECT_NO_THROW(build_loops(1.0 / 3.0));
}

TEST(Segments, ArcGeometry) {
  const Segment a = Segment::arc({1, 0}, 0.5, std::numbers::pi, 2 * std::numbers::pi);
  EXPECT_NEAR(a.length(), std::numbers::pi, 1e-15);
  EXPECT_LT(std::abs(a.start() - cd(0.5, 0)), 1e-15);
  EXPECT_NEAR(std::abs(a.tangent(0.3)), 1.0, 1e-15);
  const Segment b = a.reversed();
  EXPECT_LT(std::abs(b.start() - a.end()), 1e-12);
  EXPECT_LT(std::abs(b.point(1.0) - a.point(a.length() - 1.0)), 1e-12);
}

TEST(Integrate, FirstVariationClosedFormOnLine) {
  const FoliationParams p = test_point();
  const FloatModel m = make_float_model(p);
  const cd l1 = m.lambda1, l2 = m.lambda2;
  for (cd to : {cd(0.5, 0.0), cd(0.2, 0.6), cd(-0.4, -0.3)}) {
    const HolonomyJet j = integrate_variations(m, open_path(to), 1, {});
    const cd exact = std::pow(1.0 + to, l1) * std::pow(1.0 - to, l2);
    EXPECT_LT(rel(j[1], exact), 1e-9) << to;
  }
}

TEST(Integrate, GeneratorMultipliers) {
  const FloatModel m = make_float_model(test_point());
  const LoopSet l = build_loops();
  EXPECT_LT(rel(integrate_variations(m, l.mu1, 1, {})[1], std::exp(I2PI * m.lambda1)), 1e-8);
  EXPECT_LT(rel(integrate_variations(m, l.mu2, 1, {})[1], std::exp(I2PI * m.lambda2)), 1e-8);
  EXPECT_NEAR(m.nu1().real(), std::exp(2 * std::numbers::pi), 1e-9 * std::exp(2 * std::numbers::pi));
}

TEST(Integrate, PointPathIsIdentity) {
  const FloatModel m = make_float_model(test_point());
  Loop point;
  point.label = "point";
  const HolonomyJet j = integrate_variations(m, point, 6, {});
  EXPECT_EQ(coefficient_distance(j, HolonomyJet::identity()), 0.0);
}

TEST(Integrate, ExplicitIntegrandsAgreeWithGeneralRecursion) {
  const FloatModel m = make_float_model(test_point());
  IntegratorOptions opts;
  opts.estimate_error = false;
  for (cd to : {cd(0.5, 0.1), cd(-0.3, 0.6)}) {
    const HolonomyJet a = integrate_variations(m, open_path(to), 6, opts);
    const HolonomyJet b = explicit_jet(m, open_path(to), opts);
    EXPECT_LT(coefficient_distance(a, b), 1e-8) << to;
  }
  const LoopSet l = build_loops();
  const HolonomyJet a = integrate_variations(m, l.gamma1, 6, opts);
  const HolonomyJet b = explicit_jet(m, l.gamma1, opts);
  EXPECT_LT(jet_distance(a, b), 1e-7);
}

TEST(Integrate, ClearanceViolation) {
  const FloatModel m = make_float_model(test_point());
  EXPECT_THROW(integrate_variations(m, build_loops(0.1).mu1, 2, {}), IntegrationError);
  IntegratorOptions loose;
  loose.clearance = 0.05;
  EXPECT_NO_THROW(integrate_variations(m, build_loops(0.1).mu1, 2, loose));
}

TEST(Integrate, OrderRange) {
  const FloatModel m = make_float_model(test_point());
  EXPECT_THROW(integrate_variations(m, build_loops().mu1, 0, {}), Error);
  EXPECT_THROW(integrate_variations(m, build_loops().mu1, 7, {}), Error);
}

TEST(Quadratures, LowDegreeCoefficientsMatchJet) {
  const FloatModel m = make_float_model(test_point());
  const LoopSet l = build_loops();
  for (const Loop* g : {&l.gamma1, &l.gamma2}) {
    const HolonomyJet j = integrate_variations(m, *g, 3, {});
    const QuadratureBundle b = integrate_quadratures(m, *g, {});
    EXPECT_EQ(b.value.size(), quadrature_names().size());
    EXPECT_LT(rel(j[2], b["psi2"]), 1e-6);
    const double scale = std::abs(j[3]) + std::norm(j[2]) + std::abs(b["psi3"]);
    EXPECT_LT(std::abs(j[3] - j[2] * j[2] - b["psi3"]) / scale, 1e-6);
  }
}

TEST(Quadratures, Psi2DependsOnlyOnLambda) {
  FoliationParams p = test_point();
  const LoopSet l = build_loops();
  const cd a = integrate_quadratures(make_float_model(p), l.gamma1, {})["psi2"];
  p.alpha0 = GR::parse("-1/2+1/4i");
  p.alpha1 = GR::ratio(3, 8);
  const cd b = integrate_quadratures(make_float_model(p), l.gamma1, {})["psi2"];
  EXPECT_LT(rel(a, b), 1e-7);
}

TEST(Checks, VariationFormulasAtTestPoint) {
  const FloatModel m = make_float_model(test_point());
  const LoopSet l = build_loops();
  for (int j = 1; j <= 2; ++j) {
    const auto checks = verify_variation_formulas(m, l, j, {});
    ASSERT_EQ(checks.size(), 5u);
    for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << " " << c.loop << " d" << c.degree << " " << c.residual;
  }
}

TEST(Checks, IntegralLemmasSmallSample) {
  const auto checks = verify_integral_lemmas(test_point(), build_loops(), 3, 5, {});
  EXPECT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << " d" << c.degree << " " << c.residual;
}

TEST(Checks, RandomParamsAreGenericAndReproducible) {
  std::mt19937_64 a(9), b(9);
  for (int k = 0; k < 10; ++k) {
    const FoliationParams p = random_params(a);
    EXPECT_TRUE(validate_genericity(p).exact_pass());
    const FoliationParams q = random_params(b);
    EXPECT_EQ(p.lambda1, q.lambda1);
    EXPECT_EQ(p.alpha2, q.alpha2);
  }
}

TEST(Checks, ReportJsonShape) {
  CheckResult c{"x", "gamma1", 2, 1e-9, 1e-6, true, ""};
  const nlohmann::json j = check_to_json(c);
  for (const char* key : {"name", "loop", "degree", "residual", "tolerance", "pass"}) EXPECT_TRUE(j.contains(key));
  NumericReport r;
  r.checks.push_back(c);
  r.convention = "path ab has holonomy D_b o D_a";
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(report_to_json(r).dump(), report_to_json(r).dump());
}
