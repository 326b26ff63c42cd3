#pragma once

#include "config.hpp"
#include "output.hpp"

#include "ncrotor/scaling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncrotor::app {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kSuccess = 0, kUsageError = 1, kNumericalFailure = 2, kConstraintViolation = 3 };

/// Lists WZW-allowed irreps with p + q <= max_pq.
Report cmd_reps(int n_c, int max_pq);

/// Canonical bands plus any extra bands, in exact arithmetic.
Report cmd_spectrum(const Config& config, const ResolvedParams& params, int n_c,
                    const std::vector<BandLabel>& extra_bands);

/// Calibrates against the configured physical masses at n_c.
Report cmd_calibrate(const Config& config, int n_c);

struct ProfileReport {
  Report report;
  /// (r, f, cumulative_baryon_number)
  Table profile;
};

ProfileReport cmd_profile(const Config& config, const ProfileConfig& profile, const SolverOptions& solver);

struct SweepOptions {
  std::vector<int> n_c_list;
  int tail_max = 81;
  double omega_vib = 1.0;
  double threshold = 0.1;
};

/// Window used for the exotic tail fit: last N_c of the main list up to tail_max.
std::vector<int> tail_window(const std::vector<int>& n_c_list, int tail_max);

Report cmd_sweep(const Config& config, const ResolvedParams& params, const SweepOptions& options);

/// Flag value, then the configured value (units must match the rotor
/// parameters), then 1.0 for dimensionless parameters.
double resolve_omega_vib(const std::optional<double>& flag, const ScalingConfig& scaling, Units units);

/// Parses "p,q,2j".
BandLabel parse_band(const std::string& text);

/// Parses "3,5,7" or "3:41" (odd values from 3 to 41).
std::vector<int> parse_nc_list(const std::string& text);

/// Full command-line entry point; returns the process exit code.
int run(int argc, char** argv);

}  // namespace ncrotor::app
