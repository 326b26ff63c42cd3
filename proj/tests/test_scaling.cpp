#include "ncrotor/errors.hpp"
#include "ncrotor/scaling.hpp"

#include <doctest.h>

#include <cmath>

using namespace ncrotor;

namespace {

const ReducedParams<double> kUnit{0.0, 1.0, 1.0, Units::dimensionless};

}  // namespace

TEST_CASE("odd ranges") {
  CHECK(odd_range(3, 9) == std::vector<int>{3, 5, 7, 9});
  CHECK(odd_range(3, 10) == std::vector<int>{3, 5, 7, 9});
  CHECK(odd_range(4, 8) == std::vector<int>{5, 7});
  CHECK(odd_range(9, 3).empty());
}

TEST_CASE("sweep gaps equal the closed forms") {
  const auto list = odd_range(3, 41);
  const auto result = sweep(kUnit, list);
  REQUIRE(result.n_c_values == list);
  REQUIRE(result.exotic_gap.size() == list.size());
  REQUIRE(result.ratio_decuplet.size() == list.size());
  for (std::size_t k = 0; k < list.size(); ++k) {
    const double n = list[k];
    CHECK(std::abs(result.exotic_gap[k] - (3.0 + n) / (4.0 * n)) < 1e-14);
    CHECK(std::abs(result.decuplet_gap[k] - 3.0 / (2.0 * n)) < 1e-13);
    CHECK(result.exotic_gap[k] > 0.0);
    CHECK(result.decuplet_gap[k] > 0.0);
  }
  CHECK(result.decuplet_gap[0] == doctest::Approx(0.5));
  CHECK(result.decuplet_gap[1] == doctest::Approx(0.3));
  CHECK(std::abs(result.exotic_gap.back() - 0.25) < 3.0 / (4.0 * 41.0) + 1e-15);
}

TEST_CASE("N_c = 3 entries equal direct rotor calls") {
  const ReducedParams<double> r{0.3, 0.7, 1.9, Units::dimensionless};
  const std::vector<int> list{3, 5};
  const auto result = sweep(r, list, 2.0);
  const auto p = r.at(3);
  CHECK(result.exotic_gap[0] == exotic_splitting(p));
  CHECK(result.decuplet_gap[0] == decuplet_splitting(p));
  CHECK(result.ratio_exotic[0] == exotic_splitting(p) / 2.0);
}

TEST_CASE("sweep input validation") {
  CHECK_THROWS_AS(sweep(kUnit, std::vector<int>{}), InvalidArgument);
  CHECK_THROWS_AS(sweep(kUnit, std::vector<int>{3, 4}), InvalidArgument);
  CHECK_THROWS_AS(sweep(kUnit, std::vector<int>{5, 3}), InvalidArgument);
  CHECK_THROWS_AS(sweep(kUnit, std::vector<int>{3, 3}), InvalidArgument);
  CHECK_THROWS_AS(sweep(kUnit, std::vector<int>{1, 3}), InvalidArgument);
  CHECK_THROWS_AS(sweep(kUnit, std::vector<int>{3}, 0.0), InvalidArgument);
}

TEST_CASE("exponent fit recovers pure power laws") {
  const auto list = odd_range(3, 41);
  std::vector<double> x(list.begin(), list.end());
  for (double alpha : {-2.0, -1.0, 0.0, 1.0}) {
    std::vector<double> y;
    for (double n : x) y.push_back(2.5 * std::pow(n, alpha));
    const auto fit = fit_exponent(x, y);
    CHECK(std::abs(fit.slope - alpha) < 1e-12);
    CHECK(std::abs(fit.intercept - std::log(2.5)) < 1e-12);
    CHECK(fit.residual < 1e-12);
  }
  std::vector<double> five, constant;
  for (double n : x) {
    five.push_back(5.0 / n);
    constant.push_back(0.7);
  }
  CHECK(std::abs(fit_exponent(x, five).slope + 1.0) < 1e-12);
  CHECK(std::abs(fit_exponent(x, constant).slope) < 1e-12);
}

TEST_CASE("exponent fit validation") {
  const std::vector<double> x{1, 2, 3, 4};
  CHECK_THROWS_AS(fit_exponent(x, std::vector<double>{1, 2, 0, 4}), InvalidArgument);
  CHECK_THROWS_AS(fit_exponent(x, std::vector<double>{1, 2, -3, 4}), InvalidArgument);
  CHECK_THROWS_AS(fit_exponent(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(fit_exponent(x, std::vector<double>{1, 2, 3}), InvalidArgument);
}

TEST_CASE("fitted exponents of the rotor gaps") {
  const auto main_list = odd_range(3, 41);
  const auto main = sweep(kUnit, main_list);
  const auto decuplet = fit_exponent(std::span<const int>(main.n_c_values), main.decuplet_gap);
  CHECK(decuplet.slope >= -1.01);
  CHECK(decuplet.slope <= -0.99);

  const auto tail_list = odd_range(41, 81);
  const auto tail = sweep(ReducedParams<double>{0.0, 1.0, 2.0, Units::dimensionless}, tail_list);
  const auto exotic = fit_exponent(std::span<const int>(tail.n_c_values), tail.exotic_gap);
  CHECK(exotic.slope > -0.05);
  CHECK(exotic.slope < 0.0);
}

TEST_CASE("adiabaticity verdicts") {
  const auto result = sweep(kUnit, odd_range(3, 41));
  const auto report = adiabaticity_report(result);
  CHECK(report.decuplet.verdict == Verdict::adiabatic);
  CHECK(report.exotic.verdict == Verdict::non_adiabatic);
  CHECK(report.decuplet.strictly_decreasing);
  CHECK(report.exotic.strictly_decreasing);
  CHECK(report.exotic.final_ratio > 0.25);
  CHECK(report.decuplet.final_ratio < 0.1);
  CHECK(report.threshold == 0.1);

  const auto single = adiabaticity_report(sweep(kUnit, std::vector<int>{3}));
  CHECK(single.decuplet.verdict == Verdict::insufficient_data);
  CHECK(single.exotic.verdict == Verdict::insufficient_data);
  CHECK(to_string(Verdict::insufficient_data) == "insufficient data");
  CHECK(to_string(Verdict::non_adiabatic) == "non-adiabatic");
}

TEST_CASE("classification rules") {
  CHECK(classify(std::vector<double>{0.5, 0.2, 0.05}, 0.1).verdict == Verdict::adiabatic);
  CHECK(classify(std::vector<double>{0.5, 0.5, 0.05}, 0.1).verdict == Verdict::non_adiabatic);
  CHECK(classify(std::vector<double>{0.5, 0.3, 0.2}, 0.1).verdict == Verdict::non_adiabatic);
  CHECK(classify(std::vector<double>{0.05}, 0.1).verdict == Verdict::insufficient_data);
}
