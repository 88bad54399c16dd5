#pragma once

#include <complex>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "holocert/jet.hpp"
#include "holocert/normal_form.hpp"

namespace holocert {

/// Straight segment or circular arc in the w-plane, parameterized by arclength.
struct Segment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  cd from;         ///< Line start
  cd to;           ///< Line end
  cd center;       ///< Arc center
  double radius = 0.0;
  double theta0 = 0.0;  ///< Arc start angle
  double sweep = 0.0;   ///< signed, 2*pi for one counterclockwise turn

  static Segment line(cd a, cd b);
  static Segment arc(cd center, double radius, double theta0, double sweep);

  double length() const;
  cd point(double s) const;
  /// dw/ds, unit modulus.
  cd tangent(double s) const;
  cd start() const { return point(0.0); }
  cd end() const { return point(length()); }
  Segment reversed() const;
};

struct Loop {
  std::vector<Segment> segments;
  std::string label;
  cd basepoint{0.0, 0.0};

  Loop reversed() const;
  /// Traverse *this, then `next`.
  Loop then(const Loop& next) const;
  /// Winding number around `pt` by discrete argument tracking.
  int winding_number(cd pt, int samples_per_segment = 256) const;
  /// Minimum distance from the path to `pt` (sampled, exact on lines and arcs' circles).
  double distance_to(cd pt) const;
  double length() const;
};

struct LoopSet {
  Loop mu1;     ///< once around w = -1
  Loop mu2;     ///< once around w = +1
  Loop gamma1;  ///< mu2 mu1 mu2^-1 mu1^-1, leftmost traversed first
  Loop gamma2;  ///< mu2 mu1^2 mu2^-1 mu1^-2
};

/// Throws Error unless 0 < radius < 1.
LoopSet build_loops(double radius = 0.5);

/// Complex polynomial, ascending coefficients.
struct CPoly {
  std::vector<cd> c;
  cd operator()(cd w) const;
};

CPoly to_cpoly(const MPoly& p);

/// Double-precision copy of an exact expansion, converted once per run.
struct FloatModel {
  cd lambda1;
  cd lambda2;
  std::array<cd, kMaxDegree + 1> c{};
  std::array<CPoly, kMaxDegree + 1> S;
  std::array<CPoly, kMaxDegree + 1> q;  ///< q_4, q_5, q_6
  CPoly s;

  /// K_d(w) = c_d s/r + S_d / r^d, with K_1 = s/r.
  cd K(int d, cd w) const;
  cd nu1() const;
};

FloatModel make_float_model(const NormalFormExpansion& e);
FloatModel make_float_model(const FoliationParams& p);

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-20;
  double clearance = 0.25;
  bool estimate_error = true;
  long max_steps = 2000000;
};

using State = std::vector<cd>;
/// dy/ds at arclength position: w = w(s), dw = dw/ds.
using PathRhs = std::function<void(cd w, cd dw, const State& y, State& dyds)>;

/// Integrates along every segment; returns the state at each vertex
/// (front = initial state, back = final state).  Throws IntegrationError on
/// clearance violation, step-size underflow or a non-finite state.
std::vector<State> integrate_path(const Loop& loop, const PathRhs& rhs, State y0, const IntegratorOptions& opts);

/// Holonomy jet of the return map along `loop` from the variational system
/// phi1' = K1 phi1, reduced variations phit_d' = B_d.
HolonomyJet integrate_variations(const FloatModel& m, const Loop& loop, int order, const IntegratorOptions& opts);

/// Loop integrals along one loop, keyed by name.
struct QuadratureBundle {
  std::map<std::string, cd> value;
  std::map<std::string, double> error;
  cd nu1;
  std::string loop;

  cd operator[](const std::string& k) const { return value.at(k); }
};

/// Names of the bundle integrals, in state order.
const std::vector<std::string>& quadrature_names();

QuadratureBundle integrate_quadratures(const FloatModel& m, const Loop& loop, const IntegratorOptions& opts);

struct CheckResult {
  std::string name;
  std::string loop;
  int degree = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/// RHS of the closed coefficient formulas for degrees 2..6 from a bundle.
std::array<cd, kJetOrder + 1> predicted_coefficients(const FloatModel& m, const QuadratureBundle& b,
                                                     const HolonomyJet& jet, std::array<double, kJetOrder + 1>* scale);

/// Residuals of a_2 .. a_6 along gamma_j (j = 1, 2) against the closed formulas.
std::vector<CheckResult> verify_variation_formulas(const FloatModel& m, const LoopSet& loops, int j,
                                                   const IntegratorOptions& opts, const std::string& tag = "");

/// Integral lemma checks with `samples` random draws of (P, d).
std::vector<CheckResult> verify_integral_lemmas(const FoliationParams& p, const LoopSet& loops, unsigned seed,
                                                int samples, const IntegratorOptions& opts);

struct StructuralResult {
  std::vector<CheckResult> checks;
  /// "path ab has holonomy D_b o D_a" or the opposite, whichever the data supports.
  std::string convention;
};

StructuralResult structural_checks(const FoliationParams& p, double radius, const IntegratorOptions& opts);

struct NumericConfig {
  double radius = 0.5;
  double rtol = 1e-10;
  unsigned seed = 1;
  int random_sets = 3;
  int lemma_samples = 20;
};

struct NumericReport {
  std::vector<CheckResult> checks;
  std::string convention;
  bool all_pass() const;
};

/// Every numeric cross-check at `p`, plus formula checks at random parameter sets.
NumericReport run_numeric_checks(const FoliationParams& p, const NumericConfig& cfg);

nlohmann::json check_to_json(const CheckResult& c);
nlohmann::json report_to_json(const NumericReport& r);

/// Random parameters with small-denominator rational parts, reproducible from `rng`.
FoliationParams random_params(std::mt19937_64& rng);
/// `base` with its alpha replaced by a random nearby point.
FoliationParams random_alpha(std::mt19937_64& rng, const FoliationParams& base);

}  // namespace holocert
