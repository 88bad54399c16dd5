#include "holocert/variation.hpp"

#include "holocert/pyartli.hpp"

namespace holocert {

namespace {

const MPoly& needed(const RMap& R, int k, int d) {
  auto it = R.find(k);
  if (it == R.end()) {
    throw Error("build_P: P_" + std::to_string(d) + " needs R_" + std::to_string(k) + ", which is missing");
  }
  return it->second;
}

GR q(long num, long den) { return GR::ratio(num, den); }

}  // namespace

MPoly build_q(const NormalFormExpansion& e, int d) {
  const auto& c = e.c;
  const auto& S = e.S;
  const MPoly& r = e.r;
  switch (d) {
    case 4:
      return S[4] + c[2] * S[3] * r - c[3] * q(1, 2) * S[2] * r.pow(2);
    case 5:
      return S[5] + 2 * c[2] * S[4] * r + c[2].pow(2) * S[3] * r.pow(2) -
             q(2, 3) * (c[4] + c[3] * c[2]) * S[2] * r.pow(3);
    case 6: {
      const MPoly k4 = c[3] * q(1, 2) + 3 * c[2].pow(2);
      const MPoly k3 = -(c[4] * q(1, 3)) + c[3] * c[2] * q(1, 6) + c[2].pow(3);
      const MPoly k2 =
          -(c[5] * q(3, 4)) - c[4] * c[2] * q(3, 2) - c[3].pow(2) * q(1, 8) - c[3] * c[2].pow(2) * q(3, 4);
      return S[6] + 3 * c[2] * S[5] * r + k4 * S[4] * r.pow(2) + k3 * S[3] * r.pow(3) + k2 * S[2] * r.pow(4);
    }
    default:
      throw Error("build_q: degree must be 4, 5 or 6");
  }
}

MPoly build_P(int d, const NormalFormExpansion& ea, const NormalFormExpansion& eb, const RMap& R) {
  switch (d) {
    case 3:
      return eb.S[3] - ea.S[3];
    case 4:
      return build_q(eb, 4) - build_q(ea, 4) - ea.S[2] * needed(R, 3, d);
    case 5:
      return build_q(eb, 5) - build_q(ea, 5) - 2 * ea.S[2] * needed(R, 4, d);
    case 6: {
      const MPoly& R3 = needed(R, 3, d);
      const MPoly& R4 = needed(R, 4, d);
      const MPoly& R5 = needed(R, 5, d);
      return build_q(eb, 6) - build_q(ea, 6) + build_q(eb, 4) * R3 - q(1, 2) * ea.S[2] * R3 * R3 - ea.S[3] * R4 -
             3 * ea.S[2] * R5;
    }
    default:
      throw Error("build_P: degree must lie in 3..6");
  }
}

HJets h_jets(const NormalFormExpansion& ea, const NormalFormExpansion& eb, const MPoly& R3, const MPoly& R4) {
  const auto& c = ea.c;
  const auto& ct = eb.c;
  const MPoly r3 = R3.coeff(vars::w, 0);
  const MPoly r4 = R4.coeff(vars::w, 0);
  HJets h;
  h.h2 = ct[2] - c[2];
  h.h3 = h.h2.pow(2) + (ct[3] - c[3]) * q(1, 2) + r3;
  h.h4 = (ct[4] - c[4]) * q(1, 3) - (ct[3] * ct[2] - c[3] * c[2]) * q(1, 6) - r4 - ct[2] * r3 + 3 * h.h3 * h.h2 -
         2 * h.h2.pow(3) + c[3] * q(1, 2) * h.h2;
  return h;
}

ConditionSet build_conditions(const NormalFormExpansion& ea, const NormalFormExpansion& eb, int dmax) {
  if (dmax < 3 || dmax > kMaxDegree) throw Error("build_conditions: dmax must lie in 3..6");
  ConditionSet cs;
  for (int d = 4; d <= dmax; ++d) {
    cs.q[d] = build_q(ea, d);
    cs.q_tilde[d] = build_q(eb, d);
  }
  for (int d = 3; d <= dmax; ++d) {
    const BandedMatrix m = build_Md(d, ea.lambda1, ea.lambda2);
    cs.P[d] = build_P(d, ea, eb, cs.R);
    cs.R[d] = solve_Rd(m, cs.P[d]);
    cs.F[d] = functional_Fd(m, cs.P[d], cs.R[d]);
  }
  cs.h.h2 = eb.c[2] - ea.c[2];
  if (dmax >= 4) cs.h = h_jets(ea, eb, cs.R.at(3), cs.R.at(4));
  return cs;
}

}  // namespace holocert
