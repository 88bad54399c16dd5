#pragma once

#include <array>
#include <complex>
#include <string>

namespace holocert {

using cd = std::complex<double>;

inline constexpr int kJetOrder = 6;

/// Germ z -> a1 z + ... + a6 z^6, truncated.  a[0] is always 0.
struct HolonomyJet {
  std::array<cd, kJetOrder + 1> a{};
  /// Magnitude envelope per coefficient: accumulated |integrand| norms for
  /// integrated jets, majorant series for composed ones.  Never below |a_k|.
  std::array<double, kJetOrder + 1> envelope{};
  std::string label;
  /// Max coefficient change when the integration is repeated at rtol/100.
  double error_estimate = 0.0;

  static HolonomyJet identity();
  const cd& operator[](int k) const { return a[static_cast<std::size_t>(k)]; }
  cd& operator[](int k) { return a[static_cast<std::size_t>(k)]; }
};

/// f o g truncated at order 6.
HolonomyJet compose(const HolonomyJet& f, const HolonomyJet& g);
/// Compositional inverse; throws Error if a1 = 0.
HolonomyJet invert(const HolonomyJet& f);
/// f o g o f^{-1} o g^{-1}.
HolonomyJet commutator(const HolonomyJet& f, const HolonomyJet& g);

/// max_k |a_k - b_k| / max(envelope_k of a and b, |a_k|, |b_k|, 1).
double jet_distance(const HolonomyJet& a, const HolonomyJet& b);
/// max_k |a_k - b_k| / max(|a_k|, |b_k|, 1), ignoring envelopes.
double coefficient_distance(const HolonomyJet& a, const HolonomyJet& b);

}  // namespace holocert
