#pragma once

// Rigid-rotor spectra of the collectively quantized soliton.
//
// Every formula is a template over the scalar type: Rational gives exact
// results for rational inputs, double is the floating pathway used for
// physical units and fits.

#include "ncrotor/errors.hpp"
#include "ncrotor/rational.hpp"
#include "ncrotor/su3rep.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace ncrotor {

enum class Units { dimensionless, mev };

std::string_view to_string(Units units);
Units parse_units(std::string_view text);

/// Classical inputs at a definite N_c: M_0, I_1 (inside the SU(2)
/// subspace) and I_2 (out of it).
template <RotorScalar S>
struct RotorParams {
  int n_c = 3;
  S m0{};
  S i1{1};
  S i2{1};
  Units units = Units::dimensionless;

  /// Throws InvalidArgument on bad N_c or non-positive inertia.
  void validate() const;
};

/// Per-color coefficients: M_0 = N_c m0, I_k = N_c i_k.
template <RotorScalar S>
struct ReducedParams {
  S m0{};
  S i1{1};
  S i2{1};
  Units units = Units::dimensionless;

  void validate() const;
  RotorParams<S> at(int n_c) const;
};

template <RotorScalar S>
ReducedParams<S> reduce(const RotorParams<S>& params);

template <RotorScalar S>
struct BandState {
  BandLabel band;
  S mass{};
  RotorParams<S> params;
};

/// SU(2) rotor level M_0 + J(J+1)/(2I).
template <RotorScalar S>
S su2_level(const S& m0, const S& inertia, int two_j);

/// M_0 + C_2/(2I_2) + (I_2 - I_1) J(J+1)/(2 I_1 I_2) - N_c^2/(24 I_2).
/// Throws ConstraintViolation if the band is not allowed at params.n_c.
template <RotorScalar S>
S su3_mass(const RotorParams<S>& params, const BandLabel& band);

/// Closed form (3 + N_c)/(4 I_2) for M("10bar") - M("8").
template <RotorScalar S>
S exotic_splitting(const RotorParams<S>& params);

/// M("10") - M("8"); identically 3/(2 I_1).
template <RotorScalar S>
S decuplet_splitting(const RotorParams<S>& params);

/// Reference masses for calibration. Multiplets are degenerate centroids.
template <RotorScalar S>
struct ReferenceMasses {
  S nucleon;
  S delta;
  S antidecuplet;
  S octet;
};

/// I_1 from the nucleon-delta gap, I_2 from the antidecuplet-octet gap,
/// M_0 so that M("8") equals the octet reference. Result is in MeV.
template <RotorScalar S>
RotorParams<S> calibrate(int n_c, const ReferenceMasses<S>& masses);

/// All allowed bands with p + q <= max_pq, by ascending mass with ties
/// broken on (C_2, J, dimension, p).
template <RotorScalar S>
std::vector<BandState<S>> enumerate_bands(int n_c, int max_pq, const RotorParams<S>& params);

// ---------------------------------------------------------------------------

namespace detail {

template <RotorScalar S>
S jj1(int two_j) {
  // J(J+1) = 2J(2J+2)/4
  return ratio<S>(std::int64_t{two_j} * (two_j + 2), 4);
}

template <RotorScalar S>
bool positive(const S& x) {
  if constexpr (std::is_same_v<S, double>) {
    return std::isfinite(x) && x > 0.0;
  } else {
    return x > 0;
  }
}

template <RotorScalar S>
bool finite(const S& x) {
  if constexpr (std::is_same_v<S, double>) {
    return std::isfinite(x);
  } else {
    return true;
  }
}

}  // namespace detail

template <RotorScalar S>
void RotorParams<S>::validate() const {
  require_valid_nc(n_c);
  if (!detail::positive(i1) || !detail::positive(i2)) {
    throw InvalidArgument("moments of inertia must be positive and finite");
  }
  if (!detail::finite(m0)) throw InvalidArgument("M_0 must be finite");
}

template <RotorScalar S>
void ReducedParams<S>::validate() const {
  if (!detail::positive(i1) || !detail::positive(i2)) {
    throw InvalidArgument("reduced moments of inertia must be positive and finite");
  }
  if (!detail::finite(m0)) throw InvalidArgument("reduced M_0 must be finite");
}

template <RotorScalar S>
RotorParams<S> ReducedParams<S>::at(int n_c) const {
  validate();
  require_valid_nc(n_c);
  const S n = S(n_c);
  return RotorParams<S>{n_c, n * m0, n * i1, n * i2, units};
}

template <RotorScalar S>
ReducedParams<S> reduce(const RotorParams<S>& params) {
  params.validate();
  const S n = S(params.n_c);
  return ReducedParams<S>{params.m0 / n, params.i1 / n, params.i2 / n, params.units};
}

template <RotorScalar S>
S su2_level(const S& m0, const S& inertia, int two_j) {
  if (!detail::positive(inertia)) throw InvalidArgument("inertia must be positive");
  if (two_j < 1) throw InvalidArgument("2J must be >= 1");
  return m0 + detail::jj1<S>(two_j) / (S(2) * inertia);
}

template <RotorScalar S>
S su3_mass(const RotorParams<S>& params, const BandLabel& band) {
  params.validate();
  const auto spins = allowed_spins(band.irrep, params.n_c);  // throws ConstraintViolation
  if (std::find(spins.begin(), spins.end(), band.two_j) == spins.end()) {
    throw ConstraintViolation("J = " + half_integer_string(band.two_j) + " is not allowed for " +
                              to_string(band.irrep) + " at N_c = " + std::to_string(params.n_c));
  }
  const S c2 = from_rational<S>(casimir(band.irrep));
  const S& i1 = params.i1;
  const S& i2 = params.i2;
  const S nc2 = S(std::int64_t{params.n_c} * params.n_c);
  return params.m0 + c2 / (S(2) * i2) + (i2 - i1) * detail::jj1<S>(band.two_j) / (S(2) * i1 * i2) -
         nc2 / (S(24) * i2);
}

template <RotorScalar S>
S exotic_splitting(const RotorParams<S>& params) {
  params.validate();
  return S(3 + params.n_c) / (S(4) * params.i2);
}

template <RotorScalar S>
S decuplet_splitting(const RotorParams<S>& params) {
  const auto bands = canonical_bands(params.n_c);
  return su3_mass(params, bands[1]) - su3_mass(params, bands[0]);
}

template <RotorScalar S>
RotorParams<S> calibrate(int n_c, const ReferenceMasses<S>& masses) {
  require_valid_nc(n_c);
  for (const S* m : {&masses.nucleon, &masses.delta, &masses.antidecuplet, &masses.octet}) {
    if (!detail::positive(*m)) throw CalibrationError("reference masses must be positive");
  }
  if (!(masses.delta > masses.nucleon)) {
    throw CalibrationError("delta reference must lie above the nucleon reference");
  }
  if (!(masses.antidecuplet > masses.octet)) {
    throw CalibrationError("antidecuplet reference must lie above the octet reference");
  }
  RotorParams<S> params;
  params.n_c = n_c;
  params.units = Units::mev;
  params.i1 = S(3) / (S(2) * (masses.delta - masses.nucleon));
  params.i2 = S(3 + n_c) / (S(4) * (masses.antidecuplet - masses.octet));
  params.m0 = S(0);
  params.m0 = masses.octet - su3_mass(params, canonical_bands(n_c)[0]);
  return params;
}

template <RotorScalar S>
std::vector<BandState<S>> enumerate_bands(int n_c, int max_pq, const RotorParams<S>& params) {
  if (params.n_c != n_c) throw InvalidArgument("rotor parameters were built for a different N_c");
  params.validate();
  std::vector<BandState<S>> states;
  for (auto& band : allowed_bands(n_c, max_pq)) {
    S mass = su3_mass(params, band);
    states.push_back({std::move(band), std::move(mass), params});
  }
  std::sort(states.begin(), states.end(), [](const BandState<S>& a, const BandState<S>& b) {
    if (a.mass != b.mass) return a.mass < b.mass;
    const Rational ca = casimir(a.band.irrep);
    const Rational cb = casimir(b.band.irrep);
    const auto da = dimension(a.band.irrep);
    const auto db = dimension(b.band.irrep);
    return std::tie(ca, a.band.two_j, da, a.band.irrep) < std::tie(cb, b.band.two_j, db, b.band.irrep);
  });
  return states;
}

}  // namespace ncrotor
