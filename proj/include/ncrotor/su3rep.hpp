#pragma once

// Exact SU(3) representation theory for collective quantization at odd N_c.
//
// Conventions: hypercharge is stored as 3Y, isospin and spin as 2I and 2J,
// so every quantity in this header is an integer or an exact rational.

#include "ncrotor/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncrotor {

/// Irreducible representation (p, q); p counts fundamental and q
/// antifundamental indices of the highest weight.
class Irrep {
 public:
  Irrep(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  Irrep conjugate() const { return Irrep(q_, p_); }

  friend auto operator<=>(const Irrep&, const Irrep&) = default;

 private:
  int p_;
  int q_;
};

std::string to_string(const Irrep& irrep);

/// Hypercharge Y held as the integer 3Y.
struct Hypercharge {
  int three_y = 0;

  Rational value() const { return Rational(three_y, 3); }
  friend auto operator<=>(const Hypercharge&, const Hypercharge&) = default;
};

struct IsoMultiplet {
  int two_i = 0;
  int multiplicity = 1;

  friend bool operator==(const IsoMultiplet&, const IsoMultiplet&) = default;
};

/// Isospin content of one hypercharge level. Multiplets are ordered by
/// descending isospin.
struct IsoLevel {
  Hypercharge y;
  std::vector<IsoMultiplet> multiplets;

  std::int64_t state_count() const;
  friend bool operator==(const IsoLevel&, const IsoLevel&) = default;
};

/// Full hypercharge/isospin decomposition, levels ordered from Y_max down.
struct WeightTable {
  Irrep irrep{0, 0};
  std::vector<IsoLevel> levels;

  std::int64_t state_count() const;
  const IsoLevel* level_at(Hypercharge y) const;
};

/// An (irrep, J) band, optionally carrying its large-N_c nickname.
struct BandLabel {
  Irrep irrep{0, 0};
  int two_j = 1;
  std::string nickname;

  friend bool operator==(const BandLabel&, const BandLabel&) = default;
};

std::int64_t dimension(const Irrep& irrep);

/// (p^2 + q^2 + pq + 3(p+q)) / 3.
Rational casimir(const Irrep& irrep);

WeightTable weight_table(const Irrep& irrep);

/// Throws InvalidArgument unless n_c is odd and at least 3.
void require_valid_nc(int n_c);

/// True iff the irrep holds a state with Y = N_c/3.
bool wzw_allowed(const Irrep& irrep, int n_c);

/// Isospins (as 2I) present at Y = N_c/3, ascending, repeated by
/// multiplicity. These are the allowed rotor spins 2J.
/// Throws ConstraintViolation when the level does not exist.
std::vector<int> allowed_spins(const Irrep& irrep, int n_c);

/// Body-frame strangeness S = Y - N_c/3 over the irrep.
struct StrangenessRange {
  int s_min = 0;
  int s_max = 0;

  bool exotic() const { return s_max >= 1; }
};

StrangenessRange strangeness_range(const Irrep& irrep, int n_c);

/// The "8", "10" and "10bar" bands at the given N_c, in that order.
std::array<BandLabel, 3> canonical_bands(int n_c);

/// Every (irrep, J) with p + q <= max_pq allowed at n_c. Duplicate spins
/// from multiplicity are collapsed; order is by (p + q, p, J).
std::vector<BandLabel> allowed_bands(int n_c, int max_pq);

/// Listing row used by the representation query.
struct IrrepSummary {
  Irrep irrep{0, 0};
  std::int64_t dimension = 0;
  Rational casimir;
  std::vector<int> two_j;
  StrangenessRange strangeness;
};

/// WZW-allowed irreps with p + q <= max_pq, ordered by
/// (C_2, s_max, dimension, p) so non-exotic irreps precede exotic ones of
/// equal Casimir.
std::vector<IrrepSummary> allowed_irreps(int n_c, int max_pq);

/// Formats 2J (or 2I) as "1/2", "3/2", "1", ...
std::string half_integer_string(int twice);

}  // namespace ncrotor
