#include <gtest/gtest.h>

#include <random>

#include "holocert/holonomy.hpp"
#include "holocert/normal_form.hpp"

using namespace holocert;

namespace {

FoliationParams test_point() {
  return {GR::parse("2-1i"), GR::parse("0+2i"), GR(1), GR(0), GR(0)};
}

std::vector<FoliationParams> sample_points() {
  std::vector<FoliationParams> pts{test_point()};
  std::mt19937_64 rng(20240607);
  for (int k = 0; k < 5; ++k) pts.push_back(random_params(rng));
  return pts;
}

const MPoly W = MPoly::variable(vars::w);

// Taylor coefficients in z of z (s(1 + a0 z) + z + eta z^2) / (r (1 + a0 sigma z) + p z^2)
// at a fixed rational w, by plain power-series division over Q(i).
std::vector<GR> psi_at(const FoliationParams& p, const GR& w, int dmax) {
  const GR r = w * w - GR(1);
  const GR s = p.lambda1 * (w - GR(1)) + p.lambda2 * (w + GR(1));
  const GR pp = p.alpha1 * (w - GR(1)) + p.alpha2 * (w + GR(1));
  std::vector<GR> num(static_cast<std::size_t>(dmax) + 1, GR(0));
  num[1] = s;
  if (dmax >= 2) num[2] = p.alpha0 * s + GR(1);
  if (dmax >= 3) num[3] = p.eta();
  const std::vector<GR> den{r, r * p.alpha0 * p.sigma(), pp};
  std::vector<GR> q(num.size(), GR(0));
  for (std::size_t k = 0; k < q.size(); ++k) {
    GR acc = num[k];
    for (std::size_t j = 1; j <= 2 && j <= k; ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  return q;
}

}  // namespace

TEST(Genericity, TestPointPasses) {
  const GenericityReport g = validate_genericity(test_point());
  EXPECT_TRUE(g.exact_pass()) << g.failures();
  EXPECT_TRUE(g.ordering_convention);
  bool saw_proxy = false;
  for (const auto& c : g.checks) saw_proxy = saw_proxy || c.numeric_proxy;
  EXPECT_TRUE(saw_proxy);
}

TEST(Genericity, OneThirdFailsLattice) {
  FoliationParams p = test_point();
  p.lambda1 = GR::ratio(1, 3);
  const GenericityReport g = validate_genericity(p);
  EXPECT_FALSE(g.exact_pass());
  EXPECT_NE(g.failures().find("lambda1"), std::string::npos);
  EXPECT_THROW(require_generic(p), GenericityError);
}

TEST(Genericity, EqualLambdasFailDistinctness) {
  FoliationParams p = test_point();
  p.lambda1 = GR::i();
  p.lambda2 = GR::i();
  const GenericityReport g = validate_genericity(p);
  EXPECT_FALSE(g.exact_pass());
  EXPECT_NE(g.failures().find("distinct"), std::string::npos);
}

TEST(Genericity, QuarterAndFifthLatticesAndLambda3) {
  FoliationParams p = test_point();
  p.lambda2 = GR::ratio(-7, 4);
  EXPECT_FALSE(validate_genericity(p).exact_pass());
  p = test_point();
  p.lambda1 = GR::ratio(2, 5);
  EXPECT_FALSE(validate_genericity(p).exact_pass());
  // lambda3 = 1 - l1 - l2 = 1/5
  p = test_point();
  p.lambda1 = GR::parse("3/5+1i");
  p.lambda2 = GR::parse("1/5-1i");
  EXPECT_FALSE(validate_genericity(p).exact_pass());
  // non-real values are never in the lattice
  p = test_point();
  p.lambda1 = GR::parse("1/3+1/7i");
  EXPECT_TRUE(validate_genericity(p).exact_pass());
}

TEST(Expansion, S2IsR) {
  for (const auto& p : sample_points()) EXPECT_EQ(expand_normal_form(p).S[2], W * W - MPoly(1));
}

TEST(Expansion, TestPointValues) {
  const NormalFormExpansion e = expand_normal_form(test_point());
  EXPECT_EQ(e.c_value(1), GR(1));
  EXPECT_EQ(e.c_value(2), GR::parse("-1-1i"));
  EXPECT_EQ(e.c_value(3), GR::parse("1+3i"));
  EXPECT_EQ(e.c_value(4), GR::parse("1-7i"));
  const MPoly r = W * W - MPoly(1);
  EXPECT_EQ(e.S[3], MPoly(GR::parse("-2-1i")) * r * r);
  EXPECT_TRUE(e.p.is_zero());
}

TEST(Expansion, CdClosedFormPattern) {
  // c_d = (-1)^d alpha0^{d-1} sigma^{d-2} (1 - sigma) for d >= 2
  for (const auto& p : sample_points()) {
    const NormalFormExpansion e = expand_normal_form(p);
    for (int d = 2; d <= kMaxDegree; ++d) {
      const GR sign = d % 2 == 0 ? GR(1) : GR(-1);
      const GR expect = sign * p.alpha0.pow(d - 1) * p.sigma().pow(d - 2) * (GR(1) - p.sigma());
      EXPECT_EQ(e.c_value(d), expect) << "d=" << d;
    }
  }
}

TEST(Expansion, EverySdDivisibleByR) {
  const MPoly r = W * W - MPoly(1);
  for (const auto& p : sample_points()) {
    const NormalFormExpansion e = expand_normal_form(p);
    for (int d = 2; d <= kMaxDegree; ++d) EXPECT_TRUE(divide(e.S[d], r).remainder.is_zero()) << "d=" << d;
  }
}

TEST(SeriesOracle, K1IsSOverR) {
  const FoliationParams p = test_point();
  const auto k = series_oracle(p, 1);
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[1].r_power, 1u);
  EXPECT_EQ(k[1].numerator, s_poly(p.lambda1, p.lambda2));
}

TEST(SeriesOracle, AlphaZeroGivesK2OneOverR) {
  FoliationParams p = test_point();
  p.alpha0 = GR(0);
  const auto k = series_oracle(p, 2);
  const MPoly r = W * W - MPoly(1);
  // K2 = 1/r, i.e. numerator r over r^2
  EXPECT_EQ(k[2].r_power, 2u);
  EXPECT_EQ(k[2].numerator, r);
  const NormalFormExpansion e = expand_normal_form(p);
  EXPECT_TRUE(e.c[2].is_zero());
  EXPECT_EQ(e.S[2], r);
}

TEST(SeriesOracle, RejectsOutOfRangeDegree) {
  EXPECT_THROW(series_oracle(test_point(), 0), Error);
  EXPECT_THROW(series_oracle(test_point(), 7), Error);
}

// Table reproduction: the library oracle and the closed forms agree as
// polynomials, r^d K_d - c_d r^{d-1} s - S_d = 0.
TEST(SeriesOracle, MatchesClosedFormsExactly) {
  const MPoly r = W * W - MPoly(1);
  for (const auto& p : sample_points()) {
    const NormalFormExpansion e = expand_normal_form(p);
    const auto k = series_oracle(p, kMaxDegree);
    for (int d = 1; d <= kMaxDegree; ++d) {
      const auto& kd = k[static_cast<std::size_t>(d)];
      ASSERT_EQ(kd.r_power, static_cast<unsigned>(d));
      const MPoly diff = kd.numerator - e.c[d] * r.pow(d - 1) * e.s - e.S[d];
      EXPECT_TRUE(diff.is_zero()) << "d=" << d << " diff " << diff;
    }
  }
}

// Independent check: power-series division at many rational w.  The
// difference has w-degree at most 2d + 1 <= 13, so 16 roots force it to vanish.
TEST(SeriesOracle, PointwiseSeriesDivisionAgrees) {
  for (const auto& p : sample_points()) {
    const NormalFormExpansion e = expand_normal_form(p);
    for (int j = 0; j < 16; ++j) {
      const GR w = GR::ratio(j + 2, 7) + GR::ratio(j % 3, 5) * GR::i();
      const auto q = psi_at(p, w, kMaxDegree);
      const GR r = w * w - GR(1);
      const GR k1 = e.s.evaluate({{vars::w, w}}) / r;
      EXPECT_EQ(q[1], k1);
      for (int d = 2; d <= kMaxDegree; ++d) {
        const GR closed = e.c_value(d) * k1 + e.S[d].evaluate({{vars::w, w}}) / r.pow(d);
        EXPECT_EQ(q[static_cast<std::size_t>(d)], closed) << "d=" << d << " w=" << w;
      }
    }
  }
}

TEST(Expansion, SymbolicBetaSpecializesToNumeric) {
  for (const auto& p : sample_points()) {
    const NormalFormExpansion sym = expand_symbolic_beta(p);
    const NormalFormExpansion num = expand_normal_form(p);
    const std::map<std::string, GR> at{{vars::beta0, p.alpha0}, {vars::beta1, p.alpha1}, {vars::beta2, p.alpha2}};
    for (int d = 1; d <= kMaxDegree; ++d) {
      EXPECT_EQ(sym.c[d].substitute(at), num.c[d]) << "d=" << d;
      EXPECT_EQ(sym.S[d].substitute(at), num.S[d]) << "d=" << d;
    }
  }
}
