#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "holocert/normal_form.hpp"
#include "holocert/variation.hpp"

namespace holocert {

struct ChainValues {
  std::map<int, MPoly> res1;  ///< Res_{beta2}(F_3, F_j), j = 4, 5, 6
  std::map<int, MPoly> res2;  ///< Res_{beta1}(res1[4], res1[j]), j = 5, 6
  MPoly q5;                   ///< res2[5] / (beta0 - alpha0)
  GR res3_6;                  ///< Res_{beta0}(q5, res2[6])
};

/// Throws InternalError if res2[5] is not divisible by beta0 - alpha0.
ChainValues resultant_chain(const std::map<int, MPoly>& F, const GR& alpha0);

struct LinearSolution {
  GR det;
  std::optional<GR> beta1;
  std::optional<GR> beta2;
};

/// Solves F_3 = F_4 = 0 at beta0 = alpha0, which must be affine in (beta1, beta2).
LinearSolution linear_system_solve(const MPoly& F3, const MPoly& F4, const GR& alpha0);

struct Certificate {
  FoliationParams params;
  GenericityReport genericity;
  std::map<int, unsigned> degrees;          ///< total degree of F_d in beta
  std::map<int, std::string> conditions;    ///< F_d, canonical text
  std::map<std::string, std::string> chain; ///< intermediate resultants, canonical text
  GR res3_6;
  GR det34;
  std::optional<GR> beta1;
  std::optional<GR> beta2;
  std::map<int, GR> F_at_alpha;
  std::optional<FoliationParams> alt_params;
  std::map<int, GR> F_at_alt;
  std::string verdict;
  std::vector<std::string> reasons;
  nlohmann::json numeric = nlohmann::json::object();
  double seconds_chain = 0.0;  ///< not serialized

  bool unique() const { return verdict == "UNIQUE"; }
};

/// Recomputes reasons and verdict from the stored exact values.
void assign_verdict(Certificate& cert);

/// Full exact pipeline.  Throws GenericityError when an exact genericity check fails.
Certificate certify(const FoliationParams& p, const std::optional<FoliationParams>& alt = std::nullopt);

nlohmann::json params_to_json(const FoliationParams& p);
/// {"lambda1": "...", "lambda2": "...", "alpha": ["...", "...", "..."]}; throws ParseError.
FoliationParams params_from_json(const nlohmann::json& j);

nlohmann::json genericity_to_json(const GenericityReport& g);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

bool operator==(const FoliationParams& a, const FoliationParams& b);
bool operator==(const GenericityReport& a, const GenericityReport& b);
/// Compares every serialized field.
bool operator==(const Certificate& a, const Certificate& b);

}  // namespace holocert
