#include "holocert/elimination.hpp"

#include <array>
#include <chrono>
#include <future>

#include "holocert/resultant.hpp"

namespace holocert {

using nlohmann::json;

ChainValues resultant_chain(const std::map<int, MPoly>& F, const GR& alpha0) {
  for (int d = 3; d <= 6; ++d) {
    if (F.find(d) == F.end()) throw Error("resultant_chain: F_" + std::to_string(d) + " missing");
  }
  ChainValues out;
  {
    std::map<int, std::future<MPoly>> jobs;
    for (int j = 4; j <= 6; ++j) {
      jobs[j] = std::async(std::launch::async, [&F, j] { return resultant(F.at(3), F.at(j), vars::beta2); });
    }
    for (auto& [j, f] : jobs) out.res1[j] = f.get();
  }
  {
    std::map<int, std::future<MPoly>> jobs;
    for (int j = 5; j <= 6; ++j) {
      jobs[j] = std::async(std::launch::async,
                           [&out, j] { return resultant(out.res1.at(4), out.res1.at(j), vars::beta1); });
    }
    for (auto& [j, f] : jobs) out.res2[j] = f.get();
  }
  const MPoly root = MPoly::variable(vars::beta0) - MPoly(alpha0);
  try {
    out.q5 = exact_div(out.res2.at(5), root);
  } catch (const ExactDivisionError& e) {
    throw InternalError("beta0=alpha0 not a root of Res2_5 (remainder " + e.remainder.to_string() + ")");
  }
  const MPoly r3 = resultant(out.q5, out.res2.at(6), vars::beta0);
  if (!r3.is_constant()) throw InternalError("Res3_6 still depends on " + r3.vars().front());
  out.res3_6 = r3.constant_term();
  return out;
}

LinearSolution linear_system_solve(const MPoly& F3, const MPoly& F4, const GR& alpha0) {
  const std::map<std::string, GR> at{{vars::beta0, alpha0}};
  const std::array<MPoly, 2> eq{F3.substitute(at), F4.substitute(at)};
  std::array<std::array<GR, 3>, 2> a;
  for (std::size_t i = 0; i < 2; ++i) {
    for (const auto& v : eq[i].vars()) {
      if (v != vars::beta1 && v != vars::beta2) {
        throw Error("linear_system_solve: unexpected variable " + v);
      }
    }
    if (eq[i].total_degree() > 1) {
      throw Error("linear_system_solve: F_" + std::to_string(i + 3) + " at beta0=alpha0 is not affine: " +
                  eq[i].to_string());
    }
    a[i][0] = eq[i].coeff(vars::beta1, 1).constant_term();
    a[i][1] = eq[i].coeff(vars::beta2, 1).constant_term();
    a[i][2] = eq[i].constant_term();
  }
  LinearSolution s;
  s.det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  if (s.det.is_zero()) return s;
  // a00 b1 + a01 b2 = -a02,  a10 b1 + a11 b2 = -a12
  s.beta1 = (-a[0][2] * a[1][1] + a[0][1] * a[1][2]) / s.det;
  s.beta2 = (-a[0][0] * a[1][2] + a[1][0] * a[0][2]) / s.det;
  return s;
}

void assign_verdict(Certificate& cert) {
  cert.reasons.clear();
  for (const auto& [d, v] : cert.F_at_alpha) {
    if (!v.is_zero()) cert.reasons.push_back("F" + std::to_string(d) + "(alpha) = " + v.to_string() + " is nonzero");
  }
  if (cert.res3_6.is_zero()) cert.reasons.push_back("Res3_6 vanishes");
  if (cert.det34.is_zero()) cert.reasons.push_back("det34 vanishes");
  if (cert.beta1 && cert.beta2 && (*cert.beta1 != cert.params.alpha1 || *cert.beta2 != cert.params.alpha2)) {
    cert.reasons.push_back("recovered (beta1, beta2) differs from (alpha1, alpha2)");
  }
  cert.verdict = cert.reasons.empty() ? "UNIQUE" : "INCONCLUSIVE";
}

Certificate certify(const FoliationParams& p, const std::optional<FoliationParams>& alt) {
  Certificate cert;
  cert.params = p;
  cert.genericity = validate_genericity(p);
  if (!cert.genericity.exact_pass()) throw GenericityError("parameters are not generic: " + cert.genericity.failures());

  const NormalFormExpansion ea = expand_normal_form(p);
  const NormalFormExpansion eb = expand_symbolic_beta(p);
  const ConditionSet cs = build_conditions(ea, eb);
  const std::vector<std::string> betas{vars::beta0, vars::beta1, vars::beta2};
  for (const auto& [d, F] : cs.F) {
    cert.degrees[d] = F.degree_in(betas);
    cert.conditions[d] = F.to_string();
  }

  const std::map<std::string, GR> alpha_point{{vars::beta0, p.alpha0}, {vars::beta1, p.alpha1}, {vars::beta2, p.alpha2}};
  for (const auto& [d, F] : cs.F) cert.F_at_alpha[d] = F.evaluate(alpha_point);
  if (alt) {
    cert.alt_params = alt;
    const std::map<std::string, GR> alt_point{
        {vars::beta0, alt->alpha0}, {vars::beta1, alt->alpha1}, {vars::beta2, alt->alpha2}};
    for (const auto& [d, F] : cs.F) cert.F_at_alt[d] = F.evaluate(alt_point);
  }

  const auto t0 = std::chrono::steady_clock::now();
  const ChainValues chain = resultant_chain(cs.F, p.alpha0);
  cert.seconds_chain = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& [j, v] : chain.res1) cert.chain["res1_" + std::to_string(j)] = v.to_string();
  for (const auto& [j, v] : chain.res2) cert.chain["res2_" + std::to_string(j)] = v.to_string();
  cert.chain["q5"] = chain.q5.to_string();
  cert.res3_6 = chain.res3_6;

  const LinearSolution lin = linear_system_solve(cs.F.at(3), cs.F.at(4), p.alpha0);
  cert.det34 = lin.det;
  cert.beta1 = lin.beta1;
  cert.beta2 = lin.beta2;

  assign_verdict(cert);
  return cert;
}

json params_to_json(const FoliationParams& p) {
  return {{"lambda1", p.lambda1.to_string()},
          {"lambda2", p.lambda2.to_string()},
          {"alpha", {p.alpha0.to_string(), p.alpha1.to_string(), p.alpha2.to_string()}}};
}

namespace {

GR literal(const json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + ": expected a Gaussian rational string");
  return GR::parse(j.get<std::string>());
}

std::string key(int d) { return "F" + std::to_string(d); }

json gr_map(const std::map<int, GR>& m) {
  json out = json::object();
  for (const auto& [d, v] : m) out[key(d)] = v.to_string();
  return out;
}

std::map<int, GR> gr_map_from(const json& j) {
  std::map<int, GR> out;
  for (const auto& [k, v] : j.items()) out[std::stoi(k.substr(1))] = literal(v, k);
  return out;
}

}  // namespace

FoliationParams params_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("params: expected a JSON object");
  for (const char* k : {"lambda1", "lambda2", "alpha"}) {
    if (!j.contains(k)) throw ParseError(std::string("params: missing field '") + k + "'");
  }
  const json& a = j.at("alpha");
  if (!a.is_array() || a.size() != 3) throw ParseError("params: 'alpha' must be an array of three literals");
  return {literal(j.at("lambda1"), "lambda1"), literal(j.at("lambda2"), "lambda2"), literal(a[0], "alpha[0]"),
          literal(a[1], "alpha[1]"), literal(a[2], "alpha[2]")};
}

json genericity_to_json(const GenericityReport& g) {
  json checks = json::object();
  for (const auto& c : g.checks) {
    checks[c.name] = {{"pass", c.pass}, {"numeric_proxy", c.numeric_proxy}, {"detail", c.detail}};
  }
  return {{"checks", checks}, {"exact_pass", g.exact_pass()}, {"ordering_convention", g.ordering_convention}};
}

namespace {

GenericityReport genericity_from_json(const json& j) {
  GenericityReport g;
  for (const auto& [name, c] : j.at("checks").items()) {
    g.checks.push_back({name, c.at("pass").get<bool>(), c.at("numeric_proxy").get<bool>(),
                        c.at("detail").get<std::string>()});
  }
  g.ordering_convention = j.at("ordering_convention").get<bool>();
  return g;
}

}  // namespace

json certificate_to_json(const Certificate& c) {
  json j;
  j["params"] = params_to_json(c.params);
  j["genericity"] = genericity_to_json(c.genericity);
  json degrees = json::object();
  json conditions = json::object();
  for (const auto& [d, v] : c.degrees) degrees[key(d)] = v;
  for (const auto& [d, v] : c.conditions) conditions[key(d)] = v;
  j["degrees"] = degrees;
  j["conditions"] = conditions;
  j["chain"] = c.chain;
  j["res3_6"] = c.res3_6.to_string();
  j["det34"] = c.det34.to_string();
  j["solution"] = {{"beta1", c.beta1 ? json(c.beta1->to_string()) : json(nullptr)},
                   {"beta2", c.beta2 ? json(c.beta2->to_string()) : json(nullptr)}};
  j["F_at_alpha"] = gr_map(c.F_at_alpha);
  if (c.alt_params) {
    j["alternative"] = {{"params", params_to_json(*c.alt_params)}, {"F", gr_map(c.F_at_alt)}};
  }
  j["verdict"] = c.verdict;
  j["reasons"] = c.reasons;
  j["numeric"] = c.numeric;
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  try {
    c.params = params_from_json(j.at("params"));
    c.genericity = genericity_from_json(j.at("genericity"));
    for (const auto& [k, v] : j.at("degrees").items()) c.degrees[std::stoi(k.substr(1))] = v.get<unsigned>();
    for (const auto& [k, v] : j.at("conditions").items()) c.conditions[std::stoi(k.substr(1))] = v.get<std::string>();
    c.chain = j.at("chain").get<std::map<std::string, std::string>>();
    c.res3_6 = literal(j.at("res3_6"), "res3_6");
    c.det34 = literal(j.at("det34"), "det34");
    const json& sol = j.at("solution");
    if (!sol.at("beta1").is_null()) c.beta1 = literal(sol.at("beta1"), "beta1");
    if (!sol.at("beta2").is_null()) c.beta2 = literal(sol.at("beta2"), "beta2");
    c.F_at_alpha = gr_map_from(j.at("F_at_alpha"));
    if (j.contains("alternative")) {
      c.alt_params = params_from_json(j.at("alternative").at("params"));
      c.F_at_alt = gr_map_from(j.at("alternative").at("F"));
    }
    c.verdict = j.at("verdict").get<std::string>();
    c.reasons = j.at("reasons").get<std::vector<std::string>>();
    c.numeric = j.value("numeric", json::object());
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  return c;
}

bool operator==(const FoliationParams& a, const FoliationParams& b) {
  return a.lambda1 == b.lambda1 && a.lambda2 == b.lambda2 && a.alpha0 == b.alpha0 && a.alpha1 == b.alpha1 &&
         a.alpha2 == b.alpha2;
}

bool operator==(const GenericityReport& a, const GenericityReport& b) {
  if (a.ordering_convention != b.ordering_convention || a.checks.size() != b.checks.size()) return false;
  // Serialization keys the checks by name, so compare order-insensitively.
  for (const auto& ca : a.checks) {
    bool found = false;
    for (const auto& cb : b.checks) {
      if (ca.name == cb.name) {
        found = ca.pass == cb.pass && ca.numeric_proxy == cb.numeric_proxy && ca.detail == cb.detail;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool operator==(const Certificate& a, const Certificate& b) {
  return a.params == b.params && a.genericity == b.genericity && a.degrees == b.degrees &&
         a.conditions == b.conditions && a.chain == b.chain && a.res3_6 == b.res3_6 && a.det34 == b.det34 &&
         a.beta1 == b.beta1 && a.beta2 == b.beta2 && a.F_at_alpha == b.F_at_alpha && a.alt_params == b.alt_params &&
         a.F_at_alt == b.F_at_alt && a.verdict == b.verdict && a.reasons == b.reasons && a.numeric == b.numeric;
}

}  // namespace holocert
