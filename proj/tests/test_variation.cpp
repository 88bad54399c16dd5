#include <gtest/gtest.h>

#include <random>

#include "holocert/holonomy.hpp"
#include "holocert/pyartli.hpp"
#include "holocert/variation.hpp"

using namespace holocert;

namespace {

FoliationParams test_point() {
  return {GR::parse("2-1i"), GR::parse("0+2i"), GR(1), GR(0), GR(0)};
}

const MPoly W = MPoly::variable(vars::w);
const MPoly R = W * W - MPoly(1);

std::map<std::string, GR> beta_at(const FoliationParams& p) {
  return {{vars::beta0, p.alpha0}, {vars::beta1, p.alpha1}, {vars::beta2, p.alpha2}};
}

std::vector<FoliationParams> random_points(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<FoliationParams> out;
  for (int k = 0; k < n; ++k) out.push_back(random_params(rng));
  return out;
}

}  // namespace

TEST(BuildQ, MatchesStatedFormulas) {
  for (const auto& p : random_points(3, 7)) {
    const NormalFormExpansion e = expand_normal_form(p);
    const auto& c = e.c;
    const auto& S = e.S;
    const MPoly q4 = S[4] + c[2] * S[3] * R - c[3] / GR(2) * S[2] * R.pow(2);
    const MPoly q5 = S[5] + MPoly(2) * c[2] * S[4] * R + c[2].pow(2) * S[3] * R.pow(2) -
                     GR::ratio(2, 3) * (c[4] + c[3] * c[2]) * S[2] * R.pow(3);
    EXPECT_EQ(build_q(e, 4), q4);
    EXPECT_EQ(build_q(e, 5), q5);
  }
}

TEST(BuildQ, AlphaZeroGivesZeroQ4) {
  FoliationParams p = test_point();
  p.alpha0 = GR(0);
  const NormalFormExpansion e = expand_normal_form(p);
  EXPECT_TRUE(e.c[2].is_zero());
  EXPECT_TRUE(e.c[3].is_zero());
  EXPECT_TRUE(e.S[4].is_zero());
  EXPECT_TRUE(build_q(e, 4).is_zero());
}

TEST(BuildQ, TestPointQ4DivisibleByRSquared) {
  const MPoly q4 = build_q(expand_normal_form(test_point()), 4);
  EXPECT_EQ(q4.degree(vars::w), 6u);
  EXPECT_NO_THROW(exact_div(q4, R.pow(2)));
}

TEST(BuildP, BetaEqualsAlphaVanishes) {
  for (const auto& p : random_points(3, 11)) {
    const NormalFormExpansion e = expand_normal_form(p);
    EXPECT_TRUE(build_P(3, e, e, {}).is_zero());
    EXPECT_TRUE(build_P(4, e, e, {{3, MPoly()}}).is_zero());
  }
}

TEST(BuildP, MissingRThrows) {
  const NormalFormExpansion e = expand_normal_form(test_point());
  EXPECT_THROW(build_P(4, e, e, {}), Error);
  EXPECT_THROW(build_P(7, e, e, {}), Error);
}

TEST(BuildP, SymbolicP3IsLinearInBeta) {
  const FoliationParams p = test_point();
  const MPoly P3 = build_P(3, expand_normal_form(p), expand_symbolic_beta(p), {});
  EXPECT_LE(P3.degree(vars::beta0), 1u);
  EXPECT_LE(P3.degree(vars::beta1), 1u);
  EXPECT_LE(P3.degree(vars::beta2), 1u);
  EXPECT_EQ(P3.degree_in({vars::beta0, vars::beta1, vars::beta2}), 1u);
}

TEST(HJets, IdentityAndH2Formula) {
  const FoliationParams p = test_point();
  const NormalFormExpansion ea = expand_normal_form(p);
  const HJets same = h_jets(ea, ea, MPoly(), MPoly());
  EXPECT_TRUE(same.h2.is_zero());
  EXPECT_TRUE(same.h3.is_zero());
  EXPECT_TRUE(same.h4.is_zero());

  const ConditionSet cs = build_conditions(ea, expand_symbolic_beta(p));
  const MPoly b0 = MPoly::variable(vars::beta0);
  EXPECT_EQ(cs.h.h2, (b0 - MPoly(p.alpha0)) * MPoly(GR(1) - p.sigma()));
  EXPECT_TRUE(cs.h.h2.substitute(vars::beta0, MPoly(p.alpha0)).is_zero());
}

TEST(Conditions, TestPointDegreesAndShapes) {
  const FoliationParams p = test_point();
  const ConditionSet cs = build_conditions(expand_normal_form(p), expand_symbolic_beta(p));
  const std::vector<std::string> betas{vars::beta0, vars::beta1, vars::beta2};
  for (int d = 3; d <= 6; ++d) {
    EXPECT_LE(cs.P.at(d).degree(vars::w), static_cast<unsigned>(2 * d - 2));
    EXPECT_LE(cs.R.at(d).degree(vars::w), static_cast<unsigned>(2 * d - 3));
    EXPECT_FALSE(cs.F.at(d).has_var(vars::w));
    EXPECT_EQ(cs.F.at(d).degree_in(betas), static_cast<unsigned>(d - 2)) << "d=" << d;
  }
}

// beta = alpha is always a solution, and every intermediate collapses to zero.
TEST(Conditions, BetaEqualsAlphaIsASolution) {
  std::vector<FoliationParams> pts{test_point()};
  for (const auto& p : random_points(5, 3)) pts.push_back(p);
  for (const auto& p : pts) {
    const ConditionSet cs = build_conditions(expand_normal_form(p), expand_symbolic_beta(p));
    const auto at = beta_at(p);
    for (int d = 3; d <= 6; ++d) {
      EXPECT_TRUE(cs.F.at(d).substitute(at).is_zero()) << "d=" << d;
      EXPECT_TRUE(cs.P.at(d).substitute(at).is_zero()) << "d=" << d;
      EXPECT_TRUE(cs.R.at(d).substitute(at).is_zero()) << "d=" << d;
    }
    EXPECT_TRUE(cs.h.h3.substitute(at).is_zero());
    EXPECT_TRUE(cs.h.h4.substitute(at).is_zero());
  }
}

// L_d(R_d) - P_d is the constant F_d, symbolically and at numeric beta, and
// the numeric pipeline agrees with the symbolic one evaluated at that beta.
TEST(Conditions, DefectIdentitySymbolicAndNumeric) {
  const FoliationParams p = test_point();
  const NormalFormExpansion ea = expand_normal_form(p);
  const ConditionSet sym = build_conditions(ea, expand_symbolic_beta(p));
  for (int d = 3; d <= 6; ++d) {
    const MPoly defect = apply_Ld(d, p.lambda1, p.lambda2, sym.R.at(d)) - sym.P.at(d);
    EXPECT_EQ(defect, sym.F.at(d)) << "d=" << d;
  }
  std::mt19937_64 rng(99);
  for (int k = 0; k < 4; ++k) {
    const FoliationParams b = random_alpha(rng, p);
    const ConditionSet num = build_conditions(ea, expand_normal_form(b));
    for (int d = 3; d <= 6; ++d) {
      const MPoly defect = apply_Ld(d, p.lambda1, p.lambda2, num.R.at(d)) - num.P.at(d);
      EXPECT_TRUE(defect.is_constant());
      EXPECT_EQ(defect, num.F.at(d));
      EXPECT_EQ(num.F.at(d), sym.F.at(d).substitute(beta_at(b))) << "d=" << d;
    }
  }
}

TEST(Conditions, DmaxRange) {
  const NormalFormExpansion e = expand_normal_form(test_point());
  EXPECT_THROW(build_conditions(e, e, 2), Error);
  EXPECT_THROW(build_conditions(e, e, 7), Error);
  const ConditionSet cs = build_conditions(e, e, 3);
  EXPECT_EQ(cs.F.size(), 1u);
}
