#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "monochain/synth.hpp"
#include "test_support.hpp"

using namespace monochain;
using Catch::Approx;

TEST_CASE("gen_circle_chain", "[synth]") {
  const Chain quarter = gen_circle_chain(4, 1, 1.0);
  REQUIRE(quarter.size() == 4);
  const Chain expected{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t i = 0; i < 4; ++i) CHECK(distance(quarter[i], expected[i]) <= 1e-15);

  const Chain c = gen_circle_chain(10, 3, 1.0);
  REQUIRE(c.size() == 30);
  CHECK(c[0] == Point{1, 0});
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    CHECK(dot(c[i], c[i + 1]) == Approx(std::cos(std::numbers::pi / 5)).epsilon(1e-14));
  }
  CHECK(signal_degree(c).value() == Approx(1.0).epsilon(1e-12));
  CHECK(signal_degree(gen_circle_chain(10, 3, 2.0)).value() == Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(gen_circle_chain(2, 1, 1.0), InputError);
  CHECK_THROWS_AS(gen_circle_chain(10, 0, 1.0), InputError);
  CHECK_THROWS_AS(gen_circle_chain(10, 1, 0.0), InputError);
}

TEST_CASE("add_noise", "[synth]") {
  const Chain c = gen_circle_chain(10, 3, 1.0);
  CHECK(add_noise(c, 0.0, 1) == c);
  CHECK(add_noise(c, 0.01, 99) == add_noise(c, 0.01, 99));
  CHECK_FALSE(add_noise(c, 0.01, 99) == add_noise(c, 0.01, 100));
  CHECK_THROWS_AS(add_noise(c, -0.1, 1), InputError);

  const double measured = mse(c, add_noise(c, 0.05, 42));
  CHECK(std::abs(measured - 0.05) <= 0.35 * 0.05);
}

TEST_CASE("add_noise is calibrated on average", "[synth][statistical]") {
  // 3000 points * 3 coordinates: the mean squared displacement has a
  // relative standard deviation of sqrt(2/9000) ~ 1.5%.
  const Chain c = gen_circle_chain(100, 30, 1.0);
  Chain lifted;
  for (const auto& p : c) lifted.push_back(Point{p[0], p[1], 0.0});
  CHECK(mse(lifted, add_noise(lifted, 0.02, 5)) == Approx(0.02).epsilon(0.06));
}

TEST_CASE("gaussian source moments", "[synth][statistical]") {
  GaussianSource g(2024);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = g();
    sum += x;
    sum2 += x * x;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(sum2 / n == Approx(1.0).epsilon(0.02));
}

TEST_CASE("mse", "[synth]") {
  const Chain c{{0, 0}, {1, 0}};
  CHECK(mse(c, c) == 0.0);
  CHECK(mse(Chain{{0, 0}}, Chain{{3, 4}}) == 25.0);
  CHECK(mse(c, Chain{{0, 1}, {1, 1}}) == 1.0);
  CHECK_THROWS_AS(mse(c, Chain{{0, 0}}), InputError);
  CHECK_THROWS_AS(mse(c, Chain{{0, 0, 0}, {1, 0, 0}}), InputError);
}

TEST_CASE("pearson", "[synth]") {
  const std::vector<double> xs{1, 2, 3, 4.5};
  std::vector<double> neg;
  for (double x : xs) neg.push_back(-x);
  CHECK(pearson(xs, xs) == Approx(1.0).epsilon(1e-15));
  CHECK(pearson(xs, neg) == Approx(-1.0).epsilon(1e-15));
  CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{6, 4, 2}) ==
        Approx(-1.0).epsilon(1e-15));
  // Hand-computed: x = (1,2,3), y = (1,3,2): sxy = 1, sxx = syy = 2
  CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{1, 3, 2}) ==
        Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(pearson(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}),
                  UndefinedStatistic);
  CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{1}), InputError);
  CHECK_THROWS_AS(pearson(std::vector<double>{1, 2}, std::vector<double>{1, 2, 3}), InputError);
}

TEST_CASE("run_sweep noiseless row", "[synth]") {
  const std::vector<double> grid{0.0};
  const auto records = run_sweep(grid, 3, 42);
  REQUIRE(records.size() == 1);
  const auto& r = records[0];
  CHECK(r.measured_mse == 0.0);
  CHECK(r.degree_raw.value() == Approx(1.0).epsilon(1e-9));
  CHECK(r.degree_sp.value() == Approx(1.0).epsilon(1e-9));
  CHECK(r.degree_ma3.value() == Approx(0.872678).margin(1e-4));
  CHECK(r.degree_ma5 < r.degree_ma3);
}

TEST_CASE("run_sweep properties", "[synth]") {
  const auto grid = default_noise_grid();
  const auto a = run_sweep(grid, 10, 42);
  const auto b = run_sweep(grid, 10, 42);
  REQUIRE(a.size() == 11);

  std::vector<double> noise, raw;
  int violations = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].measured_mse == b[i].measured_mse);
    CHECK(a[i].degree_sp == b[i].degree_sp);
    if (a[i].target_mse > 0) CHECK(std::abs(a[i].measured_mse / a[i].target_mse - 1.0) <= 0.2);
    if (a[i].target_mse <= 0.005) CHECK(a[i].degree_sp > a[i].degree_ma3);
    if (i > 0 && a[i].degree_raw > a[i - 1].degree_raw) ++violations;
    noise.push_back(a[i].target_mse);
    raw.push_back(a[i].degree_raw.value());
  }
  CHECK(violations <= 1);
  CHECK(pearson(noise, raw) <= -0.8);
}

TEST_CASE("sp beats raw in every trial", "[synth]") {
  const Chain clean = gen_circle_chain(10, 3, 1.0);
  for (double level : default_noise_grid()) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const TrialResult r = run_trial(clean, level, 42 + t);
      CHECK(r.sp >= r.raw);
    }
  }
}
