#pragma once

// Classical hedgehog soliton of the quartic-stabilized nonlinear sigma model.
//
// Lengths are measured in 1/(e F_pi) and energies in F_pi/e, where F_pi and e
// are the two couplings of the model. In these units the static energy of
// the hedgehog U = exp(i tau.rhat f(r)) is
//
//   E = 4 pi Int dr [ r^2 f'^2/8 + sin^2 f/4                     (e2)
//                   + sin^2 f f'^2 + sin^4 f/(2 r^2)             (e4)
//                   + m^2 r^2 (1 - cos f)/4 ]                    (e_mass)
//
// and the moments of inertia, in units of 1/(e^3 F_pi), are
//
//   I_1 = (2 pi/3) Int dr r^2 sin^2 f [1 + 4 (f'^2 + sin^2 f/r^2)]
//   I_2 = (pi/2)   Int dr r^2 (1 - cos f) [1 + f'^2 + 2 sin^2 f/r^2]

#include "ncrotor/rotor.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ncrotor {

struct ModelSpec {
  enum class Variant { standard_quartic };

  Variant variant = Variant::standard_quartic;
  /// Pion decay constant in the F_pi ~ 2 f_pi normalization.
  double f_pi_mev = 129.0;
  /// Quartic (stabilizing) coupling.
  double e = 5.45;
  /// m_pi/(e F_pi); absent means the chiral limit.
  std::optional<double> pion_mass;

  void validate() const;
};

enum class Spacing { uniform, stretched };

std::string_view to_string(Spacing spacing);
Spacing parse_spacing(std::string_view text);

/// Radial grid on [0, r_max]. The stretched grid places node i at
/// r_max sinh(s t_i)/sinh(s), t_i = i/(n-1), clustering nodes at the core.
struct GridSpec {
  double r_max = 100.0;
  int n_points = 1000;
  Spacing spacing = Spacing::stretched;
  double stretch = 5.0;

  void validate() const;
};

std::vector<double> make_grid(const GridSpec& grid);

struct SolverOptions {
  int max_iterations = 200;
  /// Converged once the undamped Newton step predicts an energy decrease
  /// below this fraction of the energy.
  double decrement_tolerance = 1e-13;
  double virial_tolerance = 1e-3;
  int min_points = 200;
  /// Seeds the perturbation of the initial guess.
  std::uint64_t seed = 0;
  /// When false, exhausting the budget returns the last iterate with
  /// converged = false instead of throwing.
  bool require_convergence = true;
  /// When false, the grid-resolution check is skipped.
  bool require_virial = true;
};

struct ProfileSolution {
  std::vector<double> r;
  std::vector<double> f;
  double e2 = 0.0;
  double e4 = 0.0;
  double e_mass = 0.0;
  double m0 = 0.0;
  double i1 = 0.0;
  double i2 = 0.0;
  double b = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Minimizes the discretized energy with f(0) = pi, f(r_max) = 0.
/// Throws ConvergenceError when the iteration budget runs out and
/// GridTooCoarse when the grid has fewer than min_points nodes or the
/// virial ratio misses 1 by more than virial_tolerance.
ProfileSolution solve_profile(const ModelSpec& model, const GridSpec& grid,
                              const SolverOptions& options = {});

/// Winding number -(2/pi) Int sin^2 f f' dr by Gauss quadrature.
double baryon_number(const ProfileSolution& sol);

/// Winding accumulated inside each node, same quadrature.
std::vector<double> cumulative_baryon_number(const ProfileSolution& sol);

/// Closed form (1/pi)[f - sin f cos f] between the end points.
double baryon_number_closed_form(const ProfileSolution& sol);

struct EnergyParts {
  double e2 = 0.0;
  double e4 = 0.0;
  double e_mass = 0.0;

  double total() const { return e2 + e4 + e_mass; }
};

EnergyParts energy_parts(std::span<const double> r, std::span<const double> f, const ModelSpec& model);

struct ClassicalObservables {
  double m0 = 0.0;
  double i1 = 0.0;
  double i2 = 0.0;
};

/// Dimensionless M_0, I_1, I_2 by radial quadrature.
ClassicalObservables classical_observables(const ProfileSolution& sol, const ModelSpec& model);

/// (e2 + 3 e_mass)/e4, the Derrick ratio; e2/e4 in the chiral limit.
double virial_ratio(const ProfileSolution& sol);

/// Energy of the rescaled profile f(lambda r), resampled on the solution's
/// grid (zero beyond r_max).
double scaled_energy(const ProfileSolution& sol, const ModelSpec& model, double lambda);

/// Converts dimensionless observables to MeV and MeV^-1 through F_pi and e.
RotorParams<double> physical_rotor_params(const ClassicalObservables& obs, const ModelSpec& model,
                                          int n_c_reference);

}  // namespace ncrotor
