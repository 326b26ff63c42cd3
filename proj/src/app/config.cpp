#include "config.hpp"

#include "ncrotor/errors.hpp"
#include "ncrotor/scaling.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>

namespace ncrotor::app {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (key.starts_with("_")) continue;
    if (!known.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError("missing '" + key + "' in " + where);
  if (!obj.at(key).is_number()) throw ConfigError("'" + key + "' in " + where + " must be a number");
  return obj.at(key).get<double>();
}

template <class T>
T value_or(const json& obj, const std::string& key, T fallback) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("bad value for '" + key + "': " + e.what());
  }
}

Rational rational(const json& obj, const std::string& key, const std::string& where) {
  if (obj.contains(key) && obj.at(key).is_string()) {
    const auto text = obj.at(key).get<std::string>();
    try {
      return Rational(text);
    } catch (const std::exception&) {
      throw ConfigError("'" + key + "' in " + where + " is not a rational number: '" + text + "'");
    }
  }
  const double value = number(obj, key, where);
  if (!std::isfinite(value)) throw ConfigError("'" + key + "' in " + where + " must be finite");
  return exact(value);
}

ReducedParams<Rational> parse_reduced(const json& obj) {
  reject_unknown(obj, {"m0", "i1", "i2", "units"}, "reduced_params");
  ReducedParams<Rational> r;
  r.m0 = rational(obj, "m0", "reduced_params");
  r.i1 = rational(obj, "i1", "reduced_params");
  r.i2 = rational(obj, "i2", "reduced_params");
  r.units = parse_units(value_or<std::string>(obj, "units", "dimensionless"));
  try {
    r.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  return r;
}

PhysicalMasses parse_masses(const json& obj) {
  const std::string where = "physical_masses";
  reject_unknown(obj, {"m_nucleon", "m_delta", "m_octet_ref", "m_antidecuplet_ref", "theta_check"}, where);
  PhysicalMasses m;
  m.m_nucleon = number(obj, "m_nucleon", where);
  m.m_delta = number(obj, "m_delta", where);
  m.m_octet_ref = number(obj, "m_octet_ref", where);
  m.m_antidecuplet_ref = number(obj, "m_antidecuplet_ref", where);
  if (obj.contains("theta_check") && !obj.at("theta_check").is_null()) {
    m.theta_check = number(obj, "theta_check", where);
  }
  return m;
}

ProfileConfig parse_profile(const json& obj) {
  reject_unknown(obj,
                 {"f_pi_mev", "e", "pion_mass", "r_max", "n_points", "spacing", "stretch", "nc_reference",
                  "use_for_rotor"},
                 "profile");
  ProfileConfig p;
  p.model.f_pi_mev = value_or(obj, "f_pi_mev", p.model.f_pi_mev);
  p.model.e = value_or(obj, "e", p.model.e);
  if (obj.contains("pion_mass") && !obj.at("pion_mass").is_null()) {
    p.model.pion_mass = number(obj, "pion_mass", "profile");
  }
  p.grid.r_max = value_or(obj, "r_max", p.grid.r_max);
  p.grid.n_points = value_or(obj, "n_points", p.grid.n_points);
  p.grid.spacing = parse_spacing(value_or<std::string>(obj, "spacing", std::string(to_string(p.grid.spacing))));
  p.grid.stretch = value_or(obj, "stretch", p.grid.stretch);
  p.n_c_reference = value_or(obj, "nc_reference", p.n_c_reference);
  p.use_for_rotor = value_or(obj, "use_for_rotor", p.use_for_rotor);
  try {
    p.model.validate();
    p.grid.validate();
    require_valid_nc(p.n_c_reference);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("profile: ") + e.what());
  }
  return p;
}

ScalingConfig parse_scaling(const json& obj) {
  reject_unknown(obj, {"omega_vib", "units", "n_c_list", "tail_max", "threshold"}, "scaling");
  ScalingConfig s;
  if (obj.contains("omega_vib") && !obj.at("omega_vib").is_null()) {
    s.omega_vib = number(obj, "omega_vib", "scaling");
  }
  s.omega_units = parse_units(value_or<std::string>(obj, "units", "dimensionless"));
  s.n_c_list = value_or(obj, "n_c_list", s.n_c_list);
  s.tail_max = value_or(obj, "tail_max", s.tail_max);
  s.threshold = value_or(obj, "threshold", s.threshold);
  return s;
}

}  // namespace

std::vector<int> ScalingConfig::odd_list(int lo, int hi) { return odd_range(lo, hi); }

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "table") return OutputFormat::table;
  throw ConfigError("unknown output format '" + text + "'");
}

Config parse_config(const nlohmann::json& doc, std::string source) {
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
  reject_unknown(doc, {"reduced_params", "physical_masses", "profile", "scaling", "output"}, "configuration");
  Config config;
  config.source = std::move(source);
  try {
    if (doc.contains("reduced_params") && !doc.at("reduced_params").is_null()) {
      config.reduced_params = parse_reduced(doc.at("reduced_params"));
    }
    if (doc.contains("physical_masses") && !doc.at("physical_masses").is_null()) {
      config.physical_masses = parse_masses(doc.at("physical_masses"));
    }
    if (doc.contains("profile") && !doc.at("profile").is_null()) {
      config.profile = parse_profile(doc.at("profile"));
    }
    if (doc.contains("scaling")) config.scaling = parse_scaling(doc.at("scaling"));
    if (doc.contains("output")) {
      const auto& out = doc.at("output");
      reject_unknown(out, {"format", "path"}, "output");
      if (out.contains("format") && !out.at("format").is_null()) {
        config.format = parse_format(out.at("format").get<std::string>());
      }
      if (out.contains("path") && !out.at("path").is_null()) config.output_path = out.at("path").get<std::string>();
    }
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(e.what());
  }
  return config;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("cannot parse '" + path + "': " + e.what());
  }
  return parse_config(doc, path);
}

std::string resolve_config_path(const std::optional<std::string>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NCROTOR_CONFIG"); env != nullptr && *env != '\0') return env;
  return NCROTOR_DEFAULT_CONFIG;
}

std::string to_string(ParamSource source) {
  switch (source) {
    case ParamSource::explicit_reduced:
      return "explicit";
    case ParamSource::profile:
      return "profile";
    case ParamSource::calibrated:
      return "calibrated";
  }
  return "explicit";
}

namespace {

ReducedParams<Rational> exact_reduced(const ReducedParams<double>& r) {
  return {exact(r.m0), exact(r.i1), exact(r.i2), r.units};
}

}  // namespace

ResolvedParams resolve_params(const Config& config, const SolverOptions& solver) {
  ResolvedParams out;
  if (config.reduced_params) {
    out.reduced = *config.reduced_params;
    out.source = ParamSource::explicit_reduced;
  } else if (config.profile && config.profile->use_for_rotor) {
    const auto& pc = *config.profile;
    const ProfileSolution sol = solve_profile(pc.model, pc.grid, solver);
    const auto physical = physical_rotor_params(classical_observables(sol, pc.model), pc.model, pc.n_c_reference);
    out.reduced = exact_reduced(reduce(physical));
    out.source = ParamSource::profile;
  } else if (config.physical_masses) {
    const auto& m = *config.physical_masses;
    const ReferenceMasses<Rational> refs{exact(m.m_nucleon), exact(m.m_delta), exact(m.m_antidecuplet_ref),
                                         exact(m.m_octet_ref)};
    out.calibrated = calibrate(kPhysicalNc, refs);
    out.reduced = reduce(*out.calibrated);
    out.source = ParamSource::calibrated;
  } else {
    throw ConfigError("no rotor parameter source: configure reduced_params, profile.use_for_rotor or physical_masses");
  }
  out.masses = config.physical_masses;
  return out;
}

nlohmann::json resolution_metadata(const Config& config, const ResolvedParams& resolved) {
  return {{"config", config.source},
          {"param_source", to_string(resolved.source)},
          {"resolution_order", {"explicit", "profile", "calibrated"}},
          {"units", std::string(to_string(resolved.reduced.units))}};
}

}  // namespace ncrotor::app
