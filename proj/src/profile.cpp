#include "ncrotor/profile.hpp"

#include "ncrotor/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace ncrotor {

namespace {

using std::numbers::pi;

// Two-point Gauss-Legendre on [0, 1].
constexpr std::array<double, 2> kGaussT{0.5 - 0.28867513459481287, 0.5 + 0.28867513459481287};
constexpr std::array<double, 2> kGaussW{0.5, 0.5};

// Integrand of E/(4 pi) and its derivatives in the value f and slope d.
struct Density {
  double value, df, dd, dff, dfd, ddd;
};

Density density(double r, double f, double d, double m2) {
  const double s = std::sin(f);
  const double c = std::cos(f);
  const double s2 = s * s;
  const double sin2f = 2.0 * s * c;
  const double cos2f = c * c - s2;
  const double r2 = r * r;
  Density out{};
  out.value = r2 * d * d / 8.0 + s2 / 4.0 + s2 * d * d + s2 * s2 / (2.0 * r2) + m2 * r2 * (1.0 - c) / 4.0;
  out.dd = r2 * d / 4.0 + 2.0 * s2 * d;
  out.ddd = r2 / 4.0 + 2.0 * s2;
  out.df = sin2f / 4.0 + sin2f * d * d + s2 * sin2f / r2 + m2 * r2 * s / 4.0;
  out.dff = cos2f / 2.0 + 2.0 * cos2f * d * d + (sin2f * sin2f + 2.0 * s2 * cos2f) / r2 + m2 * r2 * c / 4.0;
  out.dfd = 2.0 * sin2f * d;
  return out;
}

double mass_squared(const ModelSpec& model) {
  return model.pion_mass ? *model.pion_mass * *model.pion_mass : 0.0;
}

// Reduced energy E/(4 pi) of nodal values f on grid r.
double reduced_energy(std::span<const double> r, std::span<const double> f, double m2) {
  double total = 0.0;
  for (std::size_t c = 0; c + 1 < r.size(); ++c) {
    const double h = r[c + 1] - r[c];
    const double d = (f[c + 1] - f[c]) / h;
    for (std::size_t k = 0; k < kGaussT.size(); ++k) {
      const double t = kGaussT[k];
      total += h * kGaussW[k] * density(r[c] + t * h, f[c] + t * (f[c + 1] - f[c]), d, m2).value;
    }
  }
  return total;
}

// Gradient and tridiagonal Hessian of E/(4 pi) over all nodes.
struct Derivatives {
  std::vector<double> grad, diag, upper;
};

Derivatives derivatives(std::span<const double> r, std::span<const double> f, double m2) {
  const std::size_t n = r.size();
  Derivatives out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), std::vector<double>(n - 1, 0.0)};
  for (std::size_t c = 0; c + 1 < n; ++c) {
    const double h = r[c + 1] - r[c];
    const double d = (f[c + 1] - f[c]) / h;
    for (std::size_t k = 0; k < kGaussT.size(); ++k) {
      const double t = kGaussT[k];
      const double w = h * kGaussW[k];
      const Density e = density(r[c] + t * h, f[c] + t * (f[c + 1] - f[c]), d, m2);
      // f(t) = (1-t) f_c + t f_{c+1}, d = (f_{c+1} - f_c)/h
      const std::array<double, 2> dv{1.0 - t, t};
      const std::array<double, 2> dslope{-1.0 / h, 1.0 / h};
      for (int a = 0; a < 2; ++a) {
        out.grad[c + a] += w * (e.df * dv[a] + e.dd * dslope[a]);
      }
      auto hess = [&](int a, int b) {
        return w * (e.dff * dv[a] * dv[b] + e.dfd * (dv[a] * dslope[b] + dslope[a] * dv[b]) +
                    e.ddd * dslope[a] * dslope[b]);
      };
      out.diag[c] += hess(0, 0);
      out.diag[c + 1] += hess(1, 1);
      out.upper[c] += hess(0, 1);
    }
  }
  return out;
}

// Solves (H + mu diag|H|) x = rhs on the interior nodes 1..n-2 by LDL^T.
// Returns false if a pivot is not positive.
bool solve_damped(const Derivatives& der, double mu, std::vector<double>& x) {
  const std::size_t n = der.diag.size();
  const std::size_t m = n - 2;
  std::vector<double> pivot(m), y(m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t i = j + 1;
    double dj = der.diag[i] + mu * std::abs(der.diag[i]);
    double rhs = -der.grad[i];
    if (j > 0) {
      const double l = der.upper[i - 1] / pivot[j - 1];
      dj -= l * der.upper[i - 1];
      rhs -= l * y[j - 1];
    }
    if (!(dj > 0.0)) return false;
    pivot[j] = dj;
    y[j] = rhs;
  }
  x.assign(n, 0.0);
  for (std::size_t j = m; j-- > 0;) {
    const std::size_t i = j + 1;
    double v = y[j];
    if (j + 1 < m) v -= der.upper[i] * x[i + 1];
    x[i] = v / pivot[j];
  }
  return true;
}

std::vector<double> initial_guess(std::span<const double> r, std::uint64_t seed) {
  const double r_max = r.back();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  std::vector<double> f(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double base = pi * std::exp(-r[i]) - pi * std::exp(-r_max) * r[i] / r_max;
    f[i] = base * (1.0 + 1e-3 * jitter(rng));
  }
  f.front() = pi;
  f.back() = 0.0;
  return f;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Per-cell Gauss quadrature of g(r, f, f').
template <class Integrand>
double integrate(std::span<const double> r, std::span<const double> f, Integrand g) {
  double total = 0.0;
  for (std::size_t c = 0; c + 1 < r.size(); ++c) {
    const double h = r[c + 1] - r[c];
    const double d = (f[c + 1] - f[c]) / h;
    for (std::size_t k = 0; k < kGaussT.size(); ++k) {
      const double t = kGaussT[k];
      total += h * kGaussW[k] * g(r[c] + t * h, f[c] + t * (f[c + 1] - f[c]), d);
    }
  }
  return total;
}

}  // namespace

void ModelSpec::validate() const {
  if (!(f_pi_mev > 0.0) || !(e > 0.0) || !std::isfinite(f_pi_mev) || !std::isfinite(e)) {
    throw InvalidArgument("model couplings must be positive and finite");
  }
  if (pion_mass && (!(*pion_mass >= 0.0) || !std::isfinite(*pion_mass))) {
    throw InvalidArgument("pion mass must be non-negative");
  }
}

std::string_view to_string(Spacing spacing) {
  return spacing == Spacing::uniform ? "uniform" : "stretched";
}

Spacing parse_spacing(std::string_view text) {
  if (text == "uniform") return Spacing::uniform;
  if (text == "stretched") return Spacing::stretched;
  throw InvalidArgument("unknown grid spacing '" + std::string(text) + "'");
}

void GridSpec::validate() const {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw InvalidArgument("r_max must be positive");
  if (n_points < 3) throw InvalidArgument("grid needs at least 3 nodes");
  if (spacing == Spacing::stretched && !(stretch > 0.0)) {
    throw InvalidArgument("stretch parameter must be positive");
  }
}

std::vector<double> make_grid(const GridSpec& grid) {
  grid.validate();
  std::vector<double> r(static_cast<std::size_t>(grid.n_points));
  const double last = static_cast<double>(grid.n_points - 1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double t = static_cast<double>(i) / last;
    r[i] = grid.spacing == Spacing::uniform ? grid.r_max * t
                                            : grid.r_max * std::sinh(grid.stretch * t) / std::sinh(grid.stretch);
  }
  r.front() = 0.0;
  r.back() = grid.r_max;
  return r;
}

ProfileSolution solve_profile(const ModelSpec& model, const GridSpec& grid, const SolverOptions& options) {
  model.validate();
  const std::vector<double> r = make_grid(grid);
  const double m2 = mass_squared(model);
  std::vector<double> f = initial_guess(r, options.seed);

  double energy = reduced_energy(r, f, m2);
  double mu = 1e-3;
  bool converged = false;
  int iteration = 0;
  std::vector<double> step, trial(f.size());

  while (iteration < options.max_iterations && !converged) {
    ++iteration;
    const Derivatives der = derivatives(r, f, m2);

    while (!solve_damped(der, mu, step)) mu = std::max(10.0 * mu, 1e-6);
    const double step_norm = max_abs(step);

    // -g.step: the energy decrease the quadratic model predicts.
    double slope = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) slope += der.grad[i] * step[i];

    if (-slope < options.decrement_tolerance * std::abs(energy)) {
      if (mu == 0.0) {
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += step[i];
        energy = reduced_energy(r, f, m2);
        converged = true;
      } else {
        mu = 0.0;  // confirm with an undamped step
      }
      continue;
    }
    // Near the minimum the energy change is below round-off; take the
    // undamped step without a line search.
    if (step_norm < 1e-7) {
      mu = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += step[i];
      energy = reduced_energy(r, f, m2);
      continue;
    }

    double alpha = 1.0;
    bool accepted = false;
    for (int k = 0; k < 40; ++k) {
      for (std::size_t i = 0; i < f.size(); ++i) trial[i] = f[i] + alpha * step[i];
      const double e_trial = reduced_energy(r, trial, m2);
      if (e_trial <= energy + 1e-4 * alpha * slope) {
        f.swap(trial);
        energy = e_trial;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      mu = std::max(10.0 * mu, 1e-6);
    } else if (alpha == 1.0) {
      mu = mu < 1e-9 ? 0.0 : mu * 0.1;
    }
  }

  ProfileSolution sol;
  sol.r = r;
  sol.f = std::move(f);
  sol.converged = converged;
  sol.iterations = iteration;
  const EnergyParts parts = energy_parts(sol.r, sol.f, model);
  sol.e2 = parts.e2;
  sol.e4 = parts.e4;
  sol.e_mass = parts.e_mass;
  const ClassicalObservables obs = classical_observables(sol, model);
  sol.m0 = obs.m0;
  sol.i1 = obs.i1;
  sol.i2 = obs.i2;
  sol.b = baryon_number(sol);

  const double virial = virial_ratio(sol);
  if (!converged && options.require_convergence) {
    std::ostringstream msg;
    msg << "profile relaxation did not converge after " << iteration << " iterations (virial ratio "
        << virial << ")";
    throw ConvergenceError(msg.str());
  }
  if (converged && options.require_virial &&
      (grid.n_points < options.min_points || !(std::abs(virial - 1.0) <= options.virial_tolerance))) {
    std::ostringstream msg;
    msg << "grid too coarse: " << grid.n_points << " nodes (minimum " << options.min_points
        << "), virial ratio " << virial << " outside 1 +/- " << options.virial_tolerance;
    throw GridTooCoarse(msg.str());
  }
  return sol;
}

EnergyParts energy_parts(std::span<const double> r, std::span<const double> f, const ModelSpec& model) {
  const double m2 = mass_squared(model);
  EnergyParts parts;
  parts.e2 = 4.0 * pi * integrate(r, f, [](double x, double v, double d) {
               const double s = std::sin(v);
               return x * x * d * d / 8.0 + s * s / 4.0;
             });
  parts.e4 = 4.0 * pi * integrate(r, f, [](double x, double v, double d) {
               const double s2 = std::sin(v) * std::sin(v);
               return s2 * d * d + s2 * s2 / (2.0 * x * x);
             });
  if (m2 > 0.0) {
    parts.e_mass = 4.0 * pi * integrate(r, f, [m2](double x, double v, double) {
                     return m2 * x * x * (1.0 - std::cos(v)) / 4.0;
                   });
  }
  return parts;
}

ClassicalObservables classical_observables(const ProfileSolution& sol, const ModelSpec& model) {
  if (sol.r.size() < 2 || sol.r.size() != sol.f.size()) {
    throw InvalidArgument("profile solution is empty or malformed");
  }
  ClassicalObservables obs;
  obs.m0 = energy_parts(sol.r, sol.f, model).total();
  obs.i1 = 2.0 * pi / 3.0 * integrate(sol.r, sol.f, [](double x, double v, double d) {
             const double s2 = std::sin(v) * std::sin(v);
             return x * x * s2 * (1.0 + 4.0 * (d * d + s2 / (x * x)));
           });
  obs.i2 = pi / 2.0 * integrate(sol.r, sol.f, [](double x, double v, double d) {
             const double s2 = std::sin(v) * std::sin(v);
             return x * x * (1.0 - std::cos(v)) * (1.0 + d * d + 2.0 * s2 / (x * x));
           });
  if (!(obs.i1 > 0.0) || !(obs.i2 > 0.0) || !std::isfinite(obs.m0)) {
    throw InvalidArgument("quadrature of classical observables failed");
  }
  return obs;
}

double baryon_number(const ProfileSolution& sol) {
  const auto cumulative = cumulative_baryon_number(sol);
  return cumulative.back();
}

std::vector<double> cumulative_baryon_number(const ProfileSolution& sol) {
  // Three-point Gauss on each cell; the winding density is smooth in f.
  static constexpr std::array<double, 3> t{0.5 - 0.38729833462074170, 0.5, 0.5 + 0.38729833462074170};
  static constexpr std::array<double, 3> w{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  std::vector<double> out(sol.r.size(), 0.0);
  double total = 0.0;
  for (std::size_t c = 0; c + 1 < sol.r.size(); ++c) {
    const double df = sol.f[c + 1] - sol.f[c];
    double cell = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const double s = std::sin(sol.f[c] + t[k] * df);
      cell += w[k] * s * s * df;
    }
    total += -2.0 / pi * cell;
    out[c + 1] = total;
  }
  return out;
}

double baryon_number_closed_form(const ProfileSolution& sol) {
  auto g = [](double v) { return v - std::sin(v) * std::cos(v); };
  return (g(sol.f.front()) - g(sol.f.back())) / pi;
}

double virial_ratio(const ProfileSolution& sol) { return (sol.e2 + 3.0 * sol.e_mass) / sol.e4; }

double scaled_energy(const ProfileSolution& sol, const ModelSpec& model, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("scale factor must be positive");
  const auto& r = sol.r;
  std::vector<double> g(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double x = lambda * r[i];
    if (x >= r.back()) {
      g[i] = 0.0;
      continue;
    }
    const auto it = std::upper_bound(r.begin(), r.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - r.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - r[lo]) / (r[hi] - r[lo]);
    g[i] = (1.0 - t) * sol.f[lo] + t * sol.f[hi];
  }
  return energy_parts(r, g, model).total();
}

RotorParams<double> physical_rotor_params(const ClassicalObservables& obs, const ModelSpec& model,
                                          int n_c_reference) {
  model.validate();
  require_valid_nc(n_c_reference);
  const double energy_unit = model.f_pi_mev / model.e;
  const double inertia_unit = 1.0 / (model.e * model.e * model.e * model.f_pi_mev);
  RotorParams<double> params;
  params.n_c = n_c_reference;
  params.m0 = obs.m0 * energy_unit;
  params.i1 = obs.i1 * inertia_unit;
  params.i2 = obs.i2 * inertia_unit;
  params.units = Units::mev;
  params.validate();
  return params;
}

}  // namespace ncrotor
