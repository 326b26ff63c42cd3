#include "ncrotor/rotor.hpp"

namespace ncrotor {

std::string_view to_string(Units units) {
  switch (units) {
    case Units::dimensionless:
      return "dimensionless";
    case Units::mev:
      return "MeV";
  }
  return "dimensionless";
}

Units parse_units(std::string_view text) {
  if (text == "dimensionless") return Units::dimensionless;
  if (text == "MeV" || text == "mev") return Units::mev;
  throw InvalidArgument("unknown unit system '" + std::string(text) + "'");
}

template struct RotorParams<double>;
template struct RotorParams<Rational>;
template struct ReducedParams<double>;
template struct ReducedParams<Rational>;

}  // namespace ncrotor
