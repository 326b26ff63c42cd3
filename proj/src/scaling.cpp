#include "ncrotor/scaling.hpp"

#include "ncrotor/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ncrotor {

std::vector<int> odd_range(int lo, int hi) {
  std::vector<int> out;
  for (int n = lo | 1; n <= hi; n += 2) out.push_back(n);
  return out;
}

SweepResult sweep(const ReducedParams<double>& reduced, std::span<const int> n_c_list, double omega_vib) {
  if (n_c_list.empty()) throw InvalidArgument("N_c sweep list is empty");
  if (!(omega_vib > 0.0) || !std::isfinite(omega_vib)) {
    throw InvalidArgument("omega_vib must be positive and finite");
  }
  for (std::size_t k = 0; k < n_c_list.size(); ++k) {
    require_valid_nc(n_c_list[k]);
    if (k > 0 && n_c_list[k] <= n_c_list[k - 1]) {
      throw InvalidArgument("N_c sweep list must be strictly ascending");
    }
  }
  reduced.validate();

  SweepResult out;
  out.omega_vib = omega_vib;
  out.units = reduced.units;
  for (int n_c : n_c_list) {
    const RotorParams<double> params = reduced.at(n_c);
    const double exotic = exotic_splitting(params);
    const double decuplet = decuplet_splitting(params);
    out.n_c_values.push_back(n_c);
    out.exotic_gap.push_back(exotic);
    out.decuplet_gap.push_back(decuplet);
    out.ratio_exotic.push_back(exotic / omega_vib);
    out.ratio_decuplet.push_back(decuplet / omega_vib);
  }
  return out;
}

ExponentFit fit_exponent(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("fit inputs differ in length");
  if (x.size() < 4) throw InvalidArgument("exponent fit needs at least 4 points");
  const std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw InvalidArgument("exponent fit needs positive values");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw InvalidArgument("exponent fit needs distinct abscissae");

  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    fit.residual = std::max(fit.residual, std::abs(ly[i] - (fit.intercept + fit.slope * lx[i])));
  }
  return fit;
}

ExponentFit fit_exponent(std::span<const int> n_c, std::span<const double> gaps) {
  std::vector<double> x(n_c.begin(), n_c.end());
  return fit_exponent(std::span<const double>(x), gaps);
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::adiabatic:
      return "adiabatic";
    case Verdict::non_adiabatic:
      return "non-adiabatic";
    case Verdict::insufficient_data:
      return "insufficient data";
  }
  return "insufficient data";
}

BandVerdict classify(std::span<const double> ratios, double threshold) {
  BandVerdict v;
  v.ratios.assign(ratios.begin(), ratios.end());
  if (ratios.empty()) return v;
  v.final_ratio = ratios.back();
  if (ratios.size() < 2) return v;
  v.strictly_decreasing = std::adjacent_find(ratios.begin(), ratios.end(), std::less_equal<>()) == ratios.end();
  v.verdict = v.strictly_decreasing && v.final_ratio < threshold ? Verdict::adiabatic : Verdict::non_adiabatic;
  return v;
}

AdiabaticityReport adiabaticity_report(const SweepResult& result, double threshold) {
  AdiabaticityReport report;
  report.threshold = threshold;
  report.exotic = classify(result.ratio_exotic, threshold);
  report.decuplet = classify(result.ratio_decuplet, threshold);
  return report;
}

}  // namespace ncrotor
