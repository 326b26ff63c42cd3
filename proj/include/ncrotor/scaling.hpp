#pragma once

// N_c sweeps of the rotor gaps, log-log exponent fits and the
// Born-Oppenheimer adiabaticity verdicts built from them.

#include "ncrotor/rotor.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace ncrotor {

struct SweepResult {
  std::vector<int> n_c_values;
  std::vector<double> exotic_gap;
  std::vector<double> decuplet_gap;
  /// Vibrational reference scale, N_c-independent, in the units of the gaps.
  double omega_vib = 1.0;
  std::vector<double> ratio_exotic;
  std::vector<double> ratio_decuplet;
  Units units = Units::dimensionless;
};

/// Odd N_c values lo, lo+2, ..., up to hi inclusive.
std::vector<int> odd_range(int lo, int hi);

/// Scales the reduced parameters linearly to each N_c and records the
/// exotic and decuplet gaps. The list must be non-empty, odd, >= 3 and
/// strictly ascending.
SweepResult sweep(const ReducedParams<double>& reduced, std::span<const int> n_c_list, double omega_vib = 1.0);

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Largest absolute residual in log space.
  double residual = 0.0;
};

/// Least-squares line through (log x, log y). Needs at least 4 points,
/// all positive.
ExponentFit fit_exponent(std::span<const double> x, std::span<const double> y);
ExponentFit fit_exponent(std::span<const int> n_c, std::span<const double> gaps);

enum class Verdict { adiabatic, non_adiabatic, insufficient_data };

std::string_view to_string(Verdict verdict);

struct BandVerdict {
  Verdict verdict = Verdict::insufficient_data;
  std::vector<double> ratios;
  bool strictly_decreasing = false;
  double final_ratio = 0.0;
};

struct AdiabaticityReport {
  BandVerdict exotic;
  BandVerdict decuplet;
  double threshold = 0.1;
};

/// A band is adiabatic iff gap/omega_vib strictly decreases over the sweep
/// and ends below the threshold. Fewer than two N_c values gives
/// insufficient_data.
AdiabaticityReport adiabaticity_report(const SweepResult& result, double threshold = 0.1);

BandVerdict classify(std::span<const double> ratios, double threshold);

}  // namespace ncrotor
