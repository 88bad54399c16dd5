#include "holocert/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>

namespace holocert {

using nlohmann::json;

namespace {

const std::vector<std::string> kCommands{"expand", "conditions", "eliminate", "verify-numeric", "certify"};

}  // namespace

void RunConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
    throw ConfigError("unknown command '" + command + "'");
  }
  if (params_path.empty()) throw ConfigError("--params is required");
  const int lo = command == "expand" ? 1 : 3;
  if (dmax < lo || dmax > kMaxDegree) {
    throw ConfigError("--dmax must lie in " + std::to_string(lo) + ".." + std::to_string(kMaxDegree) + " for " +
                      command);
  }
  if ((command == "eliminate" || command == "certify") && dmax != kMaxDegree) {
    throw ConfigError("the resultant chain needs F_3..F_6, so " + command + " requires --dmax 6");
  }
  if (!(radius >= 0.25 && radius <= 0.9)) throw ConfigError("--radius must lie in [0.25, 0.9]");
  if (!(rtol >= 1e-14 && rtol <= 1e-6)) throw ConfigError("--rtol must lie in [1e-14, 1e-6]");
}

NumericConfig RunConfig::numeric() const {
  NumericConfig n;
  n.radius = radius;
  n.rtol = rtol;
  n.seed = seed;
  return n;
}

FoliationParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open parameter file '" + path + "'");
  try {
    return params_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  } catch (const ParseError& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

json expand_report(const FoliationParams& p, int dmax) {
  const NormalFormExpansion e = expand_normal_form(p);
  json c = json::object();
  json S = json::object();
  for (int d = 1; d <= dmax; ++d) {
    c[std::to_string(d)] = e.c_value(d).to_string();
    S[std::to_string(d)] = e.S[d].to_string();
  }
  return {{"params", params_to_json(p)}, {"c", c}, {"S", S}, {"r", e.r.to_string()}, {"s", e.s.to_string()},
          {"p", e.p.to_string()}};
}

json conditions_report(const FoliationParams& p, int dmax) {
  const ConditionSet cs = build_conditions(expand_normal_form(p), expand_symbolic_beta(p), dmax);
  const std::vector<std::string> betas{vars::beta0, vars::beta1, vars::beta2};
  json F = json::object();
  json degrees = json::object();
  for (const auto& [d, f] : cs.F) {
    F[std::to_string(d)] = f.to_string();
    degrees[std::to_string(d)] = f.degree_in(betas);
  }
  return {{"params", params_to_json(p)}, {"F", F}, {"degrees", degrees}};
}

FoliationParams alternative_point(const FoliationParams& p, unsigned seed) {
  std::mt19937_64 rng(seed);
  FoliationParams alt = random_alpha(rng, p);
  while (alt.alpha0 == p.alpha0 && alt.alpha1 == p.alpha1 && alt.alpha2 == p.alpha2) alt = random_alpha(rng, p);
  return alt;
}

Certificate run_certify(const FoliationParams& p, const RunConfig& cfg, bool numeric) {
  Certificate cert = certify(p, alternative_point(p, cfg.seed));
  if (numeric) cert.numeric = report_to_json(run_numeric_checks(p, cfg.numeric()));
  return cert;
}

int exit_status(const Certificate& c) {
  if (!c.unique()) return 1;
  if (c.numeric.contains("all_pass") && !c.numeric.at("all_pass").get<bool>()) return 1;
  return 0;
}

int exit_status(const NumericReport& r) { return r.all_pass() ? 0 : 1; }

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const json& j, const std::string& path) {
  const std::string text = canonical_dump(j);
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open output file '" + path + "'");
  out << text;
  out.close();
  if (!out) throw Error("failed writing output file '" + path + "'");
}

int run(const RunConfig& cfg, std::ostream& err) {
  FoliationParams p;
  try {
    cfg.validate();
    p = load_params(cfg.params_path);
    require_generic(p);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cfg.command == "expand") {
      emit(expand_report(p, cfg.dmax), cfg.out_path);
      return 0;
    }
    if (cfg.command == "conditions") {
      emit(conditions_report(p, cfg.dmax), cfg.out_path);
      return 0;
    }
    if (cfg.command == "verify-numeric") {
      const NumericReport rep = run_numeric_checks(p, cfg.numeric());
      emit(report_to_json(rep), cfg.out_path);
      for (const auto& c : rep.checks) {
        if (!c.pass) err << "numeric check failed: " << c.name << " " << c.loop << " d" << c.degree << "\n";
      }
      return exit_status(rep);
    }
    const Certificate cert = run_certify(p, cfg, cfg.command == "certify" && !cfg.skip_numeric);
    emit(certificate_to_json(cert), cfg.out_path);
    for (const auto& r : cert.reasons) err << "inconclusive: " << r << "\n";
    return exit_status(cert);
  } catch (const IntegrationError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace holocert
