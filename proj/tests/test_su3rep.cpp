#include "ncrotor/errors.hpp"
#include "ncrotor/su3rep.hpp"
#include "oracles/su3_weights.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ncrotor;

namespace {

std::vector<int> odd_nc() {
  std::vector<int> out;
  for (int n = 3; n <= 21; n += 2) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("dimension and casimir closed forms") {
  CHECK(dimension(Irrep(0, 0)) == 1);
  CHECK(dimension(Irrep(1, 0)) == 3);
  CHECK(dimension(Irrep(1, 1)) == 8);
  CHECK(dimension(Irrep(3, 0)) == 10);
  CHECK(dimension(Irrep(2, 2)) == 27);
  CHECK(casimir(Irrep(1, 0)) == Rational(4, 3));
  CHECK(casimir(Irrep(1, 1)) == 3);
  CHECK(casimir(Irrep(3, 0)) == 6);
  CHECK(casimir(Irrep(0, 3)) == 6);
}

TEST_CASE("conjugation leaves dimension and casimir unchanged") {
  for (int p = 0; p <= 12; ++p) {
    for (int q = 0; q <= 12; ++q) {
      CHECK(dimension(Irrep(p, q)) == dimension(Irrep(q, p)));
      CHECK(casimir(Irrep(p, q)) == casimir(Irrep(q, p)));
    }
  }
}

TEST_CASE("negative labels are rejected") {
  CHECK_THROWS_AS(Irrep(-1, 0), InvalidArgument);
  CHECK_THROWS_AS(Irrep(0, -2), InvalidArgument);
}

TEST_CASE("weight table matches tensor-product weights") {
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; q <= 6; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const auto table = weight_table(Irrep(p, q));
      const auto expected = oracle::isospin_content(oracle::irrep_weights(p, q));
      REQUIRE(table.levels.size() == expected.size());
      for (const auto& level : table.levels) {
        const auto it = expected.find(level.y.three_y);
        REQUIRE(it != expected.end());
        REQUIRE(level.multiplets.size() == it->second.size());
        for (std::size_t k = 0; k < level.multiplets.size(); ++k) {
          CHECK(level.multiplets[k].two_i == it->second[k].first);
          CHECK(level.multiplets[k].multiplicity == it->second[k].second);
        }
      }
    }
  }
}

TEST_CASE("weight table properties up to p, q = 8") {
  for (int p = 0; p <= 8; ++p) {
    for (int q = 0; q <= 8; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const auto table = weight_table(Irrep(p, q));
      CHECK(table.state_count() == dimension(Irrep(p, q)));

      REQUIRE(!table.levels.empty());
      const auto& top = table.levels.front();
      REQUIRE(top.multiplets.size() == 1);
      CHECK(top.multiplets[0].two_i == p);
      CHECK(top.multiplets[0].multiplicity == 1);

      for (std::size_t k = 1; k < table.levels.size(); ++k) {
        CHECK(table.levels[k].y.three_y < table.levels[k - 1].y.three_y);
      }

      const auto mirror = weight_table(Irrep(q, p));
      REQUIRE(mirror.levels.size() == table.levels.size());
      const std::size_t n = table.levels.size();
      for (std::size_t k = 0; k < n; ++k) {
        const auto& a = table.levels[k];
        const auto& b = mirror.levels[n - 1 - k];
        CHECK(b.y.three_y == -a.y.three_y);
        CHECK(b.multiplets == a.multiplets);
      }
    }
  }
}

TEST_CASE("octet and decuplet content") {
  const auto octet = weight_table(Irrep(1, 1));
  REQUIRE(octet.levels.size() == 3);
  CHECK(octet.levels[1].y.three_y == 0);
  CHECK(octet.levels[1].multiplets == std::vector<IsoMultiplet>{{2, 1}, {0, 1}});

  const auto anti = weight_table(Irrep(0, 3));
  CHECK(anti.levels.front().y.value() == 2);
  CHECK(anti.levels.front().multiplets == std::vector<IsoMultiplet>{{0, 1}});
}

TEST_CASE("N_c must be odd and at least 3") {
  CHECK_NOTHROW(require_valid_nc(3));
  CHECK_NOTHROW(require_valid_nc(41));
  CHECK_THROWS_AS(require_valid_nc(4), InvalidArgument);
  CHECK_THROWS_AS(require_valid_nc(1), InvalidArgument);
  CHECK_THROWS_AS(require_valid_nc(-3), InvalidArgument);
}

TEST_CASE("allowed irreps obey triality") {
  for (int n_c : odd_nc()) {
    for (int p = 0; p <= 10; ++p) {
      for (int q = 0; q <= 10; ++q) {
        if (wzw_allowed(Irrep(p, q), n_c)) {
          CHECK((p + 2 * q - n_c) % 3 == 0);
          const auto table = weight_table(Irrep(p, q));
          CHECK(table.level_at(Hypercharge{n_c}) != nullptr);
        }
      }
    }
  }
}

TEST_CASE("allowed spins of the lowest irreps at N_c = 3") {
  CHECK(allowed_spins(Irrep(1, 1), 3) == std::vector<int>{1});
  CHECK(allowed_spins(Irrep(3, 0), 3) == std::vector<int>{3});
  CHECK(allowed_spins(Irrep(0, 3), 3) == std::vector<int>{1});
  CHECK(allowed_spins(Irrep(2, 2), 3) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(allowed_spins(Irrep(1, 0), 3), ConstraintViolation);
}

TEST_CASE("allowed spins are half-integer for odd N_c") {
  for (int n_c : odd_nc()) {
    for (int p = 0; p <= 8; ++p) {
      for (int q = 0; q <= 8; ++q) {
        if (!wzw_allowed(Irrep(p, q), n_c)) continue;
        for (int two_j : allowed_spins(Irrep(p, q), n_c)) CHECK(two_j % 2 == 1);
      }
    }
  }
}

TEST_CASE("strangeness ranges") {
  // Lowest level of (0,3) is the Y = -1 quartet.
  const auto anti = strangeness_range(Irrep(0, 3), 3);
  CHECK(anti.s_min == -2);
  CHECK(anti.s_max == 1);
  CHECK(anti.exotic());
  CHECK(strangeness_range(Irrep(3, 0), 3).s_min == -3);
  const auto octet = strangeness_range(Irrep(1, 1), 3);
  CHECK(octet.s_min == -2);
  CHECK(octet.s_max == 0);
  CHECK(!octet.exotic());
  CHECK(strangeness_range(Irrep(0, 5), 7).s_max == 1);
  CHECK_THROWS_AS(strangeness_range(Irrep(1, 0), 3), ConstraintViolation);
}

TEST_CASE("canonical bands across odd N_c") {
  for (int n_c : odd_nc()) {
    CAPTURE(n_c);
    const auto bands = canonical_bands(n_c);
    CHECK(bands[0].irrep == Irrep(1, (n_c - 1) / 2));
    CHECK(bands[1].irrep == Irrep(3, (n_c - 3) / 2));
    CHECK(bands[2].irrep == Irrep(0, (n_c + 3) / 2));
    CHECK(bands[0].nickname == "8");
    CHECK(bands[1].nickname == "10");
    CHECK(bands[2].nickname == "10bar");

    CHECK(allowed_spins(bands[0].irrep, n_c) == std::vector<int>{1});
    CHECK(allowed_spins(bands[1].irrep, n_c) == std::vector<int>{3});
    CHECK(allowed_spins(bands[2].irrep, n_c) == std::vector<int>{1});

    CHECK(strangeness_range(bands[0].irrep, n_c).s_max == 0);
    CHECK(strangeness_range(bands[1].irrep, n_c).s_max == 0);
    CHECK(strangeness_range(bands[2].irrep, n_c).s_max == 1);

    for (const auto& band : bands) {
      const auto table = weight_table(band.irrep);
      const auto* level = table.level_at(Hypercharge{n_c});
      REQUIRE(level != nullptr);
      CHECK(level->state_count() == band.two_j + 1);
    }
  }
  const auto five = canonical_bands(5);
  CHECK(five[0].irrep == Irrep(1, 2));
  CHECK(five[1].irrep == Irrep(3, 1));
  CHECK(five[2].irrep == Irrep(0, 4));
}

TEST_CASE("allowed irreps listing order") {
  const auto rows = allowed_irreps(3, 4);
  REQUIRE(rows.size() >= 3);
  CHECK(rows[0].irrep == Irrep(1, 1));
  CHECK(rows[1].irrep == Irrep(3, 0));
  CHECK(rows[2].irrep == Irrep(0, 3));
  CHECK(rows[0].dimension == 8);
  CHECK(rows[1].dimension == 10);
  CHECK(rows[2].dimension == 10);
  for (int n_c : odd_nc()) {
    for (const auto& row : allowed_irreps(n_c, 6)) CHECK(wzw_allowed(row.irrep, n_c));
  }
}

TEST_CASE("allowed irreps at N_c = 5 flag exotics") {
  const auto rows = allowed_irreps(5, 5);
  auto find = [&](int p, int q) {
    return std::find_if(rows.begin(), rows.end(), [&](const IrrepSummary& s) { return s.irrep == Irrep(p, q); });
  };
  const auto a = find(1, 2);
  const auto b = find(0, 4);
  REQUIRE(a != rows.end());
  REQUIRE(b != rows.end());
  CHECK(a->two_j == std::vector<int>{1});
  CHECK(!a->strangeness.exotic());
  CHECK(b->two_j == std::vector<int>{1});
  CHECK(b->strangeness.exotic());
}

TEST_CASE("allowed bands collapse repeated spins") {
  for (const auto& band : allowed_bands(3, 6)) {
    CHECK(wzw_allowed(band.irrep, 3));
    const auto spins = allowed_spins(band.irrep, 3);
    CHECK(std::find(spins.begin(), spins.end(), band.two_j) != spins.end());
  }
  std::set<std::pair<Irrep, int>> seen;
  for (const auto& band : allowed_bands(5, 6)) CHECK(seen.insert({band.irrep, band.two_j}).second);
}

TEST_CASE("half-integer formatting") {
  CHECK(half_integer_string(1) == "1/2");
  CHECK(half_integer_string(3) == "3/2");
  CHECK(half_integer_string(2) == "1");
  CHECK(half_integer_string(0) == "0");
}
