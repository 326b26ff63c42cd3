#include "ncrotor/su3rep.hpp"

#include "ncrotor/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace ncrotor {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

// 3Y of the top and bottom levels.
int three_y_max(const Irrep& r) { return r.p() + 2 * r.q(); }
int three_y_min(const Irrep& r) { return -(2 * r.p() + r.q()); }

}  // namespace

Irrep::Irrep(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0) {
    throw InvalidArgument("irrep labels must be non-negative, got (" + std::to_string(p) + "," +
                          std::to_string(q) + ")");
  }
}

std::string to_string(const Irrep& irrep) {
  return "(" + std::to_string(irrep.p()) + "," + std::to_string(irrep.q()) + ")";
}

std::int64_t IsoLevel::state_count() const {
  std::int64_t n = 0;
  for (const auto& m : multiplets) n += std::int64_t{m.multiplicity} * (m.two_i + 1);
  return n;
}

std::int64_t WeightTable::state_count() const {
  std::int64_t n = 0;
  for (const auto& level : levels) n += level.state_count();
  return n;
}

const IsoLevel* WeightTable::level_at(Hypercharge y) const {
  for (const auto& level : levels) {
    if (level.y == y) return &level;
  }
  return nullptr;
}

std::int64_t dimension(const Irrep& irrep) {
  const std::int64_t p = irrep.p();
  const std::int64_t q = irrep.q();
  return (p + 1) * (q + 1) * (p + q + 2) / 2;
}

Rational casimir(const Irrep& irrep) {
  const std::int64_t p = irrep.p();
  const std::int64_t q = irrep.q();
  return Rational(p * p + q * q + p * q + 3 * (p + q), 3);
}

// Gelfand-Tsetlin enumeration. The top row is (p+q, q, 0); each admissible
// middle row (a, b) with p+q >= a >= q >= b >= 0 spans one isospin multiplet
// with 2I = a - b and 3Y = 3(a + b) - 2(p + 2q).
WeightTable weight_table(const Irrep& irrep) {
  const int p = irrep.p();
  const int q = irrep.q();
  std::map<int, std::map<int, int, std::greater<>>, std::greater<>> grouped;
  for (int a = q; a <= p + q; ++a) {
    for (int b = 0; b <= q; ++b) {
      ++grouped[3 * (a + b) - 2 * (p + 2 * q)][a - b];
    }
  }

  WeightTable table;
  table.irrep = irrep;
  table.levels.reserve(grouped.size());
  for (const auto& [three_y, by_isospin] : grouped) {
    IsoLevel level;
    level.y = Hypercharge{three_y};
    for (const auto& [two_i, count] : by_isospin) level.multiplets.push_back({two_i, count});
    table.levels.push_back(std::move(level));
  }
  return table;
}

void require_valid_nc(int n_c) {
  if (n_c < 3 || n_c % 2 == 0) {
    throw InvalidArgument("N_c must be odd and >= 3, got " + std::to_string(n_c));
  }
}

bool wzw_allowed(const Irrep& irrep, int n_c) {
  require_valid_nc(n_c);
  if (mod3(three_y_max(irrep) - n_c) != 0) return false;
  return three_y_min(irrep) <= n_c && n_c <= three_y_max(irrep);
}

std::vector<int> allowed_spins(const Irrep& irrep, int n_c) {
  if (!wzw_allowed(irrep, n_c)) {
    throw ConstraintViolation("irrep " + to_string(irrep) + " has no state with Y = N_c/3 at N_c = " +
                              std::to_string(n_c));
  }
  const WeightTable table = weight_table(irrep);
  const IsoLevel* level = table.level_at(Hypercharge{n_c});
  std::vector<int> spins;
  for (const auto& m : level->multiplets) spins.insert(spins.end(), m.multiplicity, m.two_i);
  std::sort(spins.begin(), spins.end());
  return spins;
}

StrangenessRange strangeness_range(const Irrep& irrep, int n_c) {
  if (!wzw_allowed(irrep, n_c)) {
    throw ConstraintViolation("irrep " + to_string(irrep) + " has no state with Y = N_c/3 at N_c = " +
                              std::to_string(n_c));
  }
  // 3S = 3Y - N_c is a multiple of 3 once the triality condition holds.
  return {(three_y_min(irrep) - n_c) / 3, (three_y_max(irrep) - n_c) / 3};
}

std::array<BandLabel, 3> canonical_bands(int n_c) {
  require_valid_nc(n_c);
  return {BandLabel{Irrep(1, (n_c - 1) / 2), 1, "8"},
          BandLabel{Irrep(3, (n_c - 3) / 2), 3, "10"},
          BandLabel{Irrep(0, (n_c + 3) / 2), 1, "10bar"}};
}

std::vector<BandLabel> allowed_bands(int n_c, int max_pq) {
  require_valid_nc(n_c);
  const auto canonical = canonical_bands(n_c);
  std::vector<BandLabel> bands;
  for (int sum = 0; sum <= max_pq; ++sum) {
    for (int p = sum; p >= 0; --p) {
      const Irrep irrep(p, sum - p);
      if (!wzw_allowed(irrep, n_c)) continue;
      auto spins = allowed_spins(irrep, n_c);
      spins.erase(std::unique(spins.begin(), spins.end()), spins.end());
      for (int two_j : spins) {
        BandLabel band{irrep, two_j, ""};
        for (const auto& c : canonical) {
          if (c.irrep == irrep && c.two_j == two_j) band.nickname = c.nickname;
        }
        bands.push_back(std::move(band));
      }
    }
  }
  return bands;
}

std::vector<IrrepSummary> allowed_irreps(int n_c, int max_pq) {
  require_valid_nc(n_c);
  std::vector<IrrepSummary> rows;
  for (int sum = 0; sum <= max_pq; ++sum) {
    for (int p = 0; p <= sum; ++p) {
      const Irrep irrep(p, sum - p);
      if (!wzw_allowed(irrep, n_c)) continue;
      rows.push_back({irrep, dimension(irrep), casimir(irrep), allowed_spins(irrep, n_c),
                      strangeness_range(irrep, n_c)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const IrrepSummary& a, const IrrepSummary& b) {
    return std::tie(a.casimir, a.strangeness.s_max, a.dimension, a.irrep) <
           std::tie(b.casimir, b.strangeness.s_max, b.dimension, b.irrep);
  });
  return rows;
}

std::string half_integer_string(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace ncrotor
