#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <type_traits>

namespace ncrotor {

/// Arbitrary-precision exact rational.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Exact conversion: every finite double is a dyadic rational.
inline Rational exact(double x) { return Rational(x); }

inline std::string to_string(const Rational& x) { return x.str(); }

/// Scalar types the rotor formulas are instantiated for.
template <class S>
concept RotorScalar = std::is_same_v<S, double> || std::is_same_v<S, Rational>;

/// num/den in the scalar type S; exact for Rational, correctly rounded for double.
template <RotorScalar S>
S ratio(std::int64_t num, std::int64_t den) {
  if constexpr (std::is_same_v<S, Rational>) {
    return Rational(num, den);
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

template <RotorScalar S>
S from_rational(const Rational& x) {
  if constexpr (std::is_same_v<S, Rational>) {
    return x;
  } else {
    return to_double(x);
  }
}

template <RotorScalar S>
double as_double(const S& x) {
  if constexpr (std::is_same_v<S, Rational>) {
    return to_double(x);
  } else {
    return x;
  }
}

}  // namespace ncrotor
