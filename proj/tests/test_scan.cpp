#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "turan/families.hpp"
#include "turan/scan.hpp"

using namespace turan;
using oracle::q;

namespace {

CoefficientFamily chebyshev_u_raw() {
  return CoefficientFamily("U", {},
                           Sequence::exact([](std::size_t n) { return n == 0 ? Rational(0) : Rational(1, 2); }),
                           Sequence::constant(Number(q(1, 2))));
}

Sequence power_sigma(long base_num, long base_den, bool squared_exponent) {
  return Sequence::exact([=](std::size_t n) {
    const std::size_t e = squared_exponent ? n * n : n;
    Rational r(1);
    for (std::size_t i = 0; i < e; ++i) {
      r *= Rational(base_num, base_den);
    }
    return r;
  });
}

}  // namespace

TEST_CASE("scan grid") {
  const auto grid = scan_grid(2001);
  CHECK(grid.front() == -1.0);
  CHECK(grid.back() == 1.0);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(std::adjacent_find(grid.begin(), grid.end()) == grid.end());
  CHECK(grid.size() <= 4002);
  CHECK(grid.size() > 3900);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(grid[i] == -grid[grid.size() - 1 - i]);
  }
  CHECK_FALSE(std::signbit(*std::find(grid.begin(), grid.end(), 0.0)));
}

TEST_CASE("normalized determinants vanish at the endpoints") {
  for (const auto& fam : {build(FamilyKind::Example3, {{"a", q(1)}}), build(FamilyKind::Legendre),
                          build(FamilyKind::Pollaczek, {{"lambda", q(1)}, {"a", q(1, 2)}})}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      CHECK(turan_det<Rational>(fam, n, Rational(1), true) == 0);
      CHECK(turan_det<Rational>(fam, n, Rational(-1), true) == 0);
    }
  }
}

TEST_CASE("Chebyshev-T determinant is 1 - x^2") {
  const auto t = build(FamilyKind::ChebyshevT);
  CHECK(turan_det<Rational>(t, 1, Rational(0), true) == 1);
  for (const Rational x : {q(1, 3), q(-5, 7), q(9, 10)}) {
    for (std::size_t n = 1; n <= 30; ++n) {
      CHECK(turan_det<Rational>(t, n, x, true) == 1 - x * x);
    }
  }
  for (double x : {-0.95, -0.3, 0.0, 0.41, 0.999}) {
    for (std::size_t n = 1; n <= 50; ++n) {
      const double tn = oracle::chebyshev_t(n, x);
      const double trig = tn * tn - oracle::chebyshev_t(n - 1, x) * oracle::chebyshev_t(n + 1, x);
      CHECK(turan_det<double>(t, n, x, true) == doctest::Approx(trig).epsilon(1e-12));
    }
  }
}

TEST_CASE("Chebyshev-U raw determinant is identically 1") {
  const auto u = chebyshev_u_raw();
  const auto polys =
      oracle::monomial_polys([](std::size_t) { return q(1, 2); }, [](std::size_t) { return q(1, 2); }, 11);
  for (const Rational x : {q(0), q(1, 2), q(-2, 3), q(3, 11)}) {
    for (std::size_t n = 1; n <= 10; ++n) {
      const Rational brute = oracle::horner(polys[n], x) * oracle::horner(polys[n], x) -
                             oracle::horner(polys[n - 1], x) * oracle::horner(polys[n + 1], x);
      CHECK(brute == 1);
      CHECK(turan_det<Rational>(u, n, x, false) == 1);
    }
  }
  const auto report = grid_scan(u, 40, 101, false);
  for (const auto& row : report.per_n) {
    CHECK(row.min_value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("grid scan") {
  SUBCASE("Example-3 a=1") {
    const auto report = grid_scan(build(FamilyKind::Example3, {{"a", q(1)}}), 50, 2001, true);
    CHECK(report.all_nonnegative());
    CHECK(report.per_n.size() == 50);
    CHECK(report.n_first == 1);
    CHECK(report.n_last == 50);
  }
  SUBCASE("Chebyshev-T: minimum 0 at the endpoints") {
    const auto t = build(FamilyKind::ChebyshevT);
    const auto report = grid_scan(t, 20, 2001, true);
    CHECK(report.all_nonnegative());
    for (const auto& row : report.per_n) {
      CHECK(std::abs(row.min_value) <= 1e-12);
      CHECK(std::abs(row.argmin_x) == 1.0);
    }
    for (double x : scan_grid(201)) {
      for (std::size_t n = 1; n <= 20; ++n) {
        CHECK(turan_det<double>(t, n, x, true) == doctest::Approx(1 - x * x).epsilon(1e-12).scale(1.0));
      }
    }
  }
  SUBCASE("a family with negative determinants is reported") {
    // Delta_1(1) = 1/gamma_0^2 - (1/gamma_0 - alpha_1)/gamma_1 = -890.
    const auto fam = CoefficientFamily::from_tables(
        "bad", {Number(0), Number(q(1, 10)), Number(q(1, 2)), Number(q(1, 2)), Number(q(1, 2))},
        {Number(q(1, 10)), Number(q(1, 100)), Number(q(1, 2)), Number(q(1, 2)), Number(q(1, 2))});
    CHECK(turan_det<Rational>(fam, 1, Rational(1), false) == -890);
    const auto report = grid_scan(fam, 3, 401, false);
    CHECK_FALSE(report.all_nonnegative());
  }
}

TEST_CASE("scaled scan") {
  const auto legendre = build(FamilyKind::Legendre);
  SUBCASE("constant sigma multiplies by c^2") {
    const auto fam = build(FamilyKind::Example3, {{"a", q(1)}});
    const auto plain = grid_scan(fam, 15, 301, true);
    const auto scaled = scaled_scan(fam, Sequence::constant(Number(3)), 15, 301);
    for (std::size_t i = 0; i < plain.per_n.size(); ++i) {
      const double scale = std::max(1.0, plain.per_n[i].scale);
      CHECK(std::abs(scaled.per_n[i].min_value - 9 * plain.per_n[i].min_value) <= 1e-12 * 9 * scale);
    }
    REQUIRE(scaled.sigma_log_concave);
    CHECK(*scaled.sigma_log_concave);
  }
  SUBCASE("log-concave sigma on Legendre") {
    const auto sigma = Sequence::exact([](std::size_t n) { return Rational(static_cast<long>(n) + 1); });
    const auto report = scaled_scan(legendre, sigma, 100, 2001);
    CHECK(report.all_nonnegative());
    CHECK(*report.sigma_log_concave);
  }
  SUBCASE("sigma_n = 1/(2n+1) is log-convex, so Legendre turns negative at x = 1") {
    const auto sigma = Sequence::exact([](std::size_t n) { return Rational(1, 2 * static_cast<long>(n) + 1); });
    CHECK(log_concavity_violation(sigma, 100) == std::optional<std::size_t>(1));
    const auto report = scaled_scan(legendre, sigma, 100, 2001);
    CHECK_FALSE(report.all_nonnegative());
    CHECK_FALSE(*report.sigma_log_concave);
    for (const auto& row : report.per_n) {
      // At x = +-1 the scaled determinant is sigma_n^2 - sigma_{n-1} sigma_{n+1}.
      const double n = static_cast<double>(row.n);
      const double at_one = -4.0 / ((2 * n + 1) * (2 * n + 1) * (4 * n * n + 4 * n - 3));
      CHECK(std::abs(row.argmin_x) == 1.0);
      CHECK(row.min_value == doctest::Approx(at_one).epsilon(1e-12));
    }
  }
  SUBCASE("log-convex sigma on Chebyshev-T") {
    const auto sigma = power_sigma(2, 1, true);
    const auto report = scaled_scan(build(FamilyKind::ChebyshevT), sigma, 10, 2001);
    CHECK_FALSE(report.all_nonnegative());
    CHECK_FALSE(*report.sigma_log_concave);
    CHECK(report.sigma_first_violation == std::optional<std::size_t>(1));
  }
}

TEST_CASE("log-concavity of sigma") {
  CHECK_FALSE(log_concavity_violation(power_sigma(1, 2, false), 50));
  CHECK(log_concavity_violation(power_sigma(2, 1, true), 50) == std::optional<std::size_t>(1));
  const auto kink = Sequence::exact([](std::size_t n) { return n == 5 ? Rational(1, 100) : Rational(1); });
  CHECK(log_concavity_violation(kink, 20) == std::optional<std::size_t>(5));
}
