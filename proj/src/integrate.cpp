#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <numbers>

#include "holocert/errors.hpp"
#include "holocert/holonomy.hpp"
#include "holocert/variation.hpp"

namespace holocert {

namespace odeint = boost::numeric::odeint;

cd CPoly::operator()(cd w) const {
  cd acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
  return acc;
}

CPoly to_cpoly(const MPoly& p) {
  for (const auto& v : p.vars()) {
    if (v != vars::w) throw Error("to_cpoly: polynomial depends on " + v);
  }
  CPoly out;
  for (const auto& coef : p.coefficients(vars::w)) out.c.push_back(coef.constant_term().to_complex());
  return out;
}

cd FloatModel::K(int d, cd w) const {
  const cd r = w * w - 1.0;
  const cd k1 = s(w) / r;
  if (d == 1) return k1;
  return c[static_cast<std::size_t>(d)] * k1 + S[static_cast<std::size_t>(d)](w) / std::pow(r, d);
}

cd FloatModel::nu1() const { return std::exp(cd{0.0, 2.0 * std::numbers::pi} * lambda1); }

FloatModel make_float_model(const NormalFormExpansion& e) {
  FloatModel m;
  m.lambda1 = e.lambda1.to_complex();
  m.lambda2 = e.lambda2.to_complex();
  m.s = to_cpoly(e.s);
  for (int d = 1; d <= kMaxDegree; ++d) {
    m.c[d] = e.c_value(d).to_complex();
    m.S[d] = to_cpoly(e.S[d]);
  }
  for (int d = 4; d <= kMaxDegree; ++d) m.q[d] = to_cpoly(build_q(e, d));
  return m;
}

FloatModel make_float_model(const FoliationParams& p) { return make_float_model(expand_normal_form(p)); }

namespace {

bool finite(const State& y) {
  for (const auto& v : y) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

void integrate_segment(const Segment& seg, const PathRhs& rhs, State& y, const IntegratorOptions& opts) {
  const double len = seg.length();
  if (len == 0.0) return;
  auto stepper = odeint::make_controlled(opts.atol, opts.rtol, odeint::runge_kutta_dopri5<State>());
  auto sys = [&](const State& x, State& dxds, double s) {
    dxds.resize(x.size());
    rhs(seg.point(s), seg.tangent(s), x, dxds);
  };
  double s = 0.0;
  double dt = len / 32.0;
  long steps = 0;
  while (len - s > 1e-14 * len) {
    if (s + dt > len) dt = len - s;
    odeint::controlled_step_result res;
    try {
      res = stepper.try_step(sys, y, s, dt);
    } catch (const std::exception& e) {
      throw IntegrationError(std::string("integrator failure: ") + e.what());
    }
    if (res == odeint::success && !finite(y)) throw IntegrationError("non-finite state along the path");
    if (++steps > opts.max_steps) throw IntegrationError("step budget exhausted along a segment");
    if (dt < 1e-13 * len) throw IntegrationError("step size underflow along a segment");
  }
}

}  // namespace

std::vector<State> integrate_path(const Loop& loop, const PathRhs& rhs, State y0, const IntegratorOptions& opts) {
  for (double pole : {-1.0, 1.0}) {
    const double dist = loop.distance_to(cd{pole, 0.0});
    if (dist < opts.clearance - 1e-12) {
      throw IntegrationError("loop " + loop.label + " passes within " + std::to_string(dist) + " of w = " +
                             std::to_string(static_cast<int>(pole)));
    }
  }
  std::vector<State> out;
  out.reserve(loop.segments.size() + 1);
  out.push_back(y0);
  for (const auto& seg : loop.segments) {
    integrate_segment(seg, rhs, y0, opts);
    out.push_back(y0);
  }
  return out;
}

namespace {

HolonomyJet variations_once(const FloatModel& m, const Loop& loop, int order, const IntegratorOptions& opts) {
  const auto n = static_cast<std::size_t>(order);
  // y[0] = phi1, y[d-1] = reduced variation of degree d; y[n - 1 + d] accumulates
  // the |integrand| norm of component d (d = 1 for phi1).
  auto rhs = [&m, n](cd w, cd dw, const State& y, State& dy) {
    std::array<cd, kJetOrder + 1> series{};
    series[1] = 1.0;
    for (std::size_t d = 2; d <= n; ++d) series[d] = y[d - 1];
    std::array<cd, kJetOrder + 1> power = series;
    std::array<cd, kJetOrder + 1> b{};
    cd phi_pow = y[0];
    for (std::size_t k = 2; k <= n; ++k) {
      std::array<cd, kJetOrder + 1> next{};
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; i + j <= n; ++j) next[i + j] += power[i] * series[j];
      }
      power = next;
      const cd kk = m.K(static_cast<int>(k), w) * phi_pow;
      for (std::size_t d = k; d <= n; ++d) b[d] += kk * power[d];
      phi_pow *= y[0];
    }
    b[1] = m.K(1, w) * y[0];
    const double speed = std::abs(dw);
    dy[0] = b[1] * dw;
    for (std::size_t d = 2; d <= n; ++d) dy[d - 1] = b[d] * dw;
    for (std::size_t d = 1; d <= n; ++d) dy[n - 1 + d] = std::abs(b[d]) * speed;
  };
  State y0(2 * n, cd{});
  y0[0] = 1.0;
  const State end = integrate_path(loop, rhs, y0, opts).back();
  HolonomyJet jet;
  jet.label = loop.label;
  jet.a[1] = end[0];
  jet.envelope[1] = std::max(std::abs(end[0]), end[n].real());
  for (std::size_t d = 2; d <= n; ++d) {
    jet.a[d] = end[0] * end[d - 1];
    jet.envelope[d] = std::max(std::abs(jet.a[d]), std::abs(end[0]) * end[n - 1 + d].real());
  }
  return jet;
}

IntegratorOptions refined(const IntegratorOptions& opts) {
  IntegratorOptions fine = opts;
  fine.rtol /= 100.0;
  fine.atol /= 100.0;
  fine.estimate_error = false;
  return fine;
}

}  // namespace

HolonomyJet integrate_variations(const FloatModel& m, const Loop& loop, int order, const IntegratorOptions& opts) {
  if (order < 1 || order > kJetOrder) throw Error("integrate_variations: order must lie in 1..6");
  HolonomyJet jet = variations_once(m, loop, order, opts);
  if (opts.estimate_error) jet.error_estimate = jet_distance(jet, variations_once(m, loop, order, refined(opts)));
  return jet;
}

const std::vector<std::string>& quadrature_names() {
  static const std::vector<std::string> names{"psi2",   "psi3",  "Delta1", "psi4",    "Delta2", "Gamma1", "psi5",
                                              "Delta3", "Delta11", "Gamma2", "Gamma01", "B1",     "psi6"};
  return names;
}

namespace {

State quadratures_once(const FloatModel& m, const Loop& loop, const IntegratorOptions& opts) {
  auto rhs = [&m](cd w, cd dw, const State& y, State& dy) {
    const cd r = w * w - 1.0;
    const cd phi = y[0];
    const cd psi2 = y[1];
    const cd psi3 = y[2];
    const cd phi2 = phi * phi;
    const cd phi3 = phi2 * phi;
    const cd phi4 = phi3 * phi;
    const cd s3 = m.S[3](w) / std::pow(r, 3) * phi2;
    const cd g4 = m.q[4](w) / std::pow(r, 4) * phi3;
    const cd g5 = m.q[5](w) / std::pow(r, 5) * phi4;
    dy[0] = m.K(1, w) * phi;
    dy[1] = m.S[2](w) / (r * r) * phi;
    dy[2] = s3;
    dy[3] = s3 * psi2;
    dy[4] = g4;
    dy[5] = s3 * psi2 * psi2;
    dy[6] = g4 * psi2;
    dy[7] = g5;
    dy[8] = s3 * psi2 * psi2 * psi2;
    dy[9] = s3 * psi2 * psi3;
    dy[10] = g4 * psi2 * psi2;
    dy[11] = g4 * psi3;
    dy[12] = g5 * psi2;
    dy[13] = m.q[6](w) / std::pow(r, 6) * phi4 * phi;
    for (auto& v : dy) v *= dw;
  };
  State y0(quadrature_names().size() + 1, cd{});
  y0[0] = 1.0;
  return integrate_path(loop, rhs, y0, opts).back();
}

}  // namespace

QuadratureBundle integrate_quadratures(const FloatModel& m, const Loop& loop, const IntegratorOptions& opts) {
  const State end = quadratures_once(m, loop, opts);
  State fine;
  if (opts.estimate_error) fine = quadratures_once(m, loop, refined(opts));
  QuadratureBundle b;
  b.loop = loop.label;
  b.nu1 = m.nu1();
  const auto& names = quadrature_names();
  for (std::size_t k = 0; k < names.size(); ++k) {
    b.value[names[k]] = end[k + 1];
    b.error[names[k]] = fine.empty() ? 0.0 : std::abs(end[k + 1] - fine[k + 1]);
  }
  return b;
}

}  // namespace holocert
