#pragma once

#include <map>

#include "holocert/normal_form.hpp"

namespace holocert {

/// q_4, q_5, q_6 built from the c_d, S_d of one expansion.
MPoly build_q(const NormalFormExpansion& e, int d);

/// R_3, R_4, R_5 keyed by degree; only the ones a given P_d needs must be present.
using RMap = std::map<int, MPoly>;

/// Condition polynomial P_d (d = 3..6) from the alpha expansion `ea` and the
/// tilde expansion `eb`.
MPoly build_P(int d, const NormalFormExpansion& ea, const NormalFormExpansion& eb, const RMap& R);

struct HJets {
  MPoly h2;
  MPoly h3;
  MPoly h4;
};

/// 2-, 3- and 4-jet coefficients of the conjugating germ.
HJets h_jets(const NormalFormExpansion& ea, const NormalFormExpansion& eb, const MPoly& R3, const MPoly& R4);

/// P_d, R_d, F_d for d = 3..6 plus q_d, tilde q_d and the h-jet constants.
struct ConditionSet {
  std::map<int, MPoly> P;
  std::map<int, MPoly> R;
  std::map<int, MPoly> F;
  std::map<int, MPoly> q;
  std::map<int, MPoly> q_tilde;
  HJets h;
};

/// Runs the degree recursion P_3 -> R_3 -> P_4 -> ... for d <= dmax (3..6).
/// `eb` may be symbolic in beta or numeric.
ConditionSet build_conditions(const NormalFormExpansion& ea, const NormalFormExpansion& eb, int dmax = kMaxDegree);

}  // namespace holocert
