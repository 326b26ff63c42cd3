#pragma once

#include "ncrotor/profile.hpp"
#include "ncrotor/rotor.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ncrotor::app {

struct PhysicalMasses {
  double m_nucleon = 0.0;
  double m_delta = 0.0;
  double m_octet_ref = 0.0;
  double m_antidecuplet_ref = 0.0;
  std::optional<double> theta_check;
};

struct ProfileConfig {
  ModelSpec model;
  GridSpec grid;
  int n_c_reference = 3;
  /// Feed the profile observables into parameter resolution.
  bool use_for_rotor = false;
};

struct ScalingConfig {
  std::optional<double> omega_vib;
  Units omega_units = Units::dimensionless;
  std::vector<int> n_c_list = odd_list(3, 41);
  int tail_max = 81;
  double threshold = 0.1;

  static std::vector<int> odd_list(int lo, int hi);
};

enum class OutputFormat { json, csv, table };

OutputFormat parse_format(const std::string& text);

struct Config {
  /// Values may be JSON numbers or exact strings such as "1/3".
  std::optional<ReducedParams<Rational>> reduced_params;
  std::optional<PhysicalMasses> physical_masses;
  std::optional<ProfileConfig> profile;
  ScalingConfig scaling;
  std::optional<OutputFormat> format;
  std::optional<std::string> output_path;
  std::string source;
};

Config parse_config(const nlohmann::json& doc, std::string source = "<inline>");
Config load_config(const std::string& path);

/// Explicit flag, then $NCROTOR_CONFIG, then the bundled defaults file.
std::string resolve_config_path(const std::optional<std::string>& flag);

enum class ParamSource { explicit_reduced, profile, calibrated };

std::string to_string(ParamSource source);

/// Rotor parameters chosen for a run. Exact rationals throughout; values
/// read as doubles are converted exactly.
struct ResolvedParams {
  ReducedParams<Rational> reduced;
  ParamSource source = ParamSource::explicit_reduced;
  std::optional<RotorParams<Rational>> calibrated;
  std::optional<PhysicalMasses> masses;
};

/// Reference N_c at which physical masses are calibrated.
inline constexpr int kPhysicalNc = 3;

/// explicit reduced_params > profile-derived (use_for_rotor) > calibrated.
ResolvedParams resolve_params(const Config& config, const SolverOptions& solver);

nlohmann::json resolution_metadata(const Config& config, const ResolvedParams& resolved);

}  // namespace ncrotor::app
