#include "holocert/jet.hpp"

#include <algorithm>

#include "holocert/errors.hpp"

namespace holocert {

namespace {

template <typename T>
using Series = std::array<T, kJetOrder + 1>;

template <typename T>
Series<T> mul(const Series<T>& x, const Series<T>& y) {
  Series<T> out{};
  for (int i = 0; i <= kJetOrder; ++i) {
    if (x[i] == T{}) continue;
    for (int j = 0; i + j <= kJetOrder; ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

// sum_k f_k g^k, truncated.
template <typename T>
Series<T> substitute(const Series<T>& f, const Series<T>& g) {
  Series<T> out{};
  Series<T> power{};
  power[0] = T{1};
  for (int k = 1; k <= kJetOrder; ++k) {
    power = mul(power, g);
    for (int n = 0; n <= kJetOrder; ++n) out[n] += f[k] * power[n];
  }
  out[0] = T{};
  return out;
}

Series<double> envelope_of(const HolonomyJet& j) {
  Series<double> e{};
  for (int k = 1; k <= kJetOrder; ++k) e[k] = std::max(j.envelope[k], std::abs(j.a[k]));
  return e;
}

}  // namespace

HolonomyJet HolonomyJet::identity() {
  HolonomyJet j;
  j.a[1] = 1.0;
  j.envelope[1] = 1.0;
  j.label = "identity";
  return j;
}

HolonomyJet compose(const HolonomyJet& f, const HolonomyJet& g) {
  HolonomyJet out;
  out.a = substitute(f.a, g.a);
  out.envelope = substitute(envelope_of(f), envelope_of(g));
  out.error_estimate = f.error_estimate + g.error_estimate;
  return out;
}

HolonomyJet invert(const HolonomyJet& f) {
  if (f.a[1] == cd{}) throw Error("jet is not invertible: linear coefficient vanishes");
  const Series<double> ef = envelope_of(f);
  HolonomyJet h;
  h.a[1] = 1.0 / f.a[1];
  h.envelope[1] = 1.0 / std::abs(f.a[1]);
  for (int n = 2; n <= kJetOrder; ++n) {
    h.a[n] = -substitute(f.a, h.a)[n] / f.a[1];
    Series<double> higher = ef;
    higher[1] = 0.0;
    h.envelope[n] = substitute(higher, h.envelope)[n] / std::abs(f.a[1]);
  }
  h.error_estimate = f.error_estimate;
  return h;
}

HolonomyJet commutator(const HolonomyJet& f, const HolonomyJet& g) {
  return compose(f, compose(g, compose(invert(f), invert(g))));
}

double jet_distance(const HolonomyJet& a, const HolonomyJet& b) {
  double d = 0.0;
  for (int k = 1; k <= kJetOrder; ++k) {
    const double scale = std::max({a.envelope[k], b.envelope[k], std::abs(a.a[k]), std::abs(b.a[k]), 1.0});
    d = std::max(d, std::abs(a.a[k] - b.a[k]) / scale);
  }
  return d;
}

double coefficient_distance(const HolonomyJet& a, const HolonomyJet& b) {
  double d = 0.0;
  for (int k = 1; k <= kJetOrder; ++k) {
    const double scale = std::max({std::abs(a.a[k]), std::abs(b.a[k]), 1.0});
    d = std::max(d, std::abs(a.a[k] - b.a[k]) / scale);
  }
  return d;
}

}  // namespace holocert
