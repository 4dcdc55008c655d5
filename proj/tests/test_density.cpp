#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "turan/density.hpp"
#include "turan/families.hpp"

using namespace turan;
using oracle::q;

TEST_CASE("orthonormal Turan with constant off-diagonals is 1") {
  const std::vector<double> a(60, 0.5);
  for (double x : {-0.9, -0.5, 0.0, 0.125, 0.75}) {
    for (std::size_t n = 1; n <= 50; ++n) {
      CHECK(orthonormal_turan(a, n, x) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("orthonormal Turan against a rational brute force") {
  // a_k = k/(k+1): evaluate p_n by the recurrence in exact arithmetic.
  std::vector<double> a;
  std::vector<Rational> aq;
  for (long k = 1; k <= 12; ++k) {
    aq.push_back(q(k, k + 1));
    a.push_back(static_cast<double>(k) / static_cast<double>(k + 1));
  }
  const auto polys = oracle::monomial_polys([&](std::size_t n) { return n == 0 ? Rational(0) : aq[n - 1]; },
                                            [&](std::size_t n) { return aq[n]; }, 11);
  for (const Rational x : {q(0), q(1, 3), q(-4, 5)}) {
    for (std::size_t n = 1; n <= 10; ++n) {
      const Rational p = oracle::horner(polys[n], x);
      const Rational brute = p * p - oracle::horner(polys[n - 1], x) * oracle::horner(polys[n + 1], x);
      CHECK(orthonormal_turan(a, n, x.get_d()) == doctest::Approx(brute.get_d()).epsilon(1e-13));
    }
  }
}

TEST_CASE("degree one at x = 0 is a_1/a_2") {
  const std::vector<double> a = {0.3, 0.7, 0.5};
  CHECK(orthonormal_turan(a, 1, 0.0) == doctest::Approx(0.3 / 0.7).epsilon(1e-15));
}

TEST_CASE("Legendre Turan limit at the origin") {
  const auto a = orthonormal_offdiag(build(FamilyKind::Legendre), 2001);
  CHECK(std::abs(orthonormal_turan(a, 2000, 0.0) / (4 / std::numbers::pi) - 1) < 0.01);
}

TEST_CASE("Chebyshev-U reconstruction is exact") {
  const std::vector<double> xs = {0.0, 0.5, -0.5};
  const auto est = estimate_density(build(FamilyKind::ChebyshevU), 100, xs);
  CHECK(est.all_valid());
  CHECK(est.offdiag_converged);
  CHECK(est.density[0] == doctest::Approx(2 / std::numbers::pi).epsilon(1e-12));
  CHECK(est.density[1] == doctest::Approx(std::sqrt(3.0) / std::numbers::pi).epsilon(1e-12));
  CHECK(est.density[2] == doctest::Approx(std::sqrt(3.0) / std::numbers::pi).epsilon(1e-12));
  for (double f : est.f_values) {
    CHECK(f == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("density grid stays inside (-1, 1)") {
  const auto xs = density_grid();
  CHECK(xs.size() == 199);
  CHECK(xs.front() == doctest::Approx(-0.99));
  CHECK(xs.back() == doctest::Approx(0.99));
  for (double x : xs) {
    CHECK(std::abs(x) < 1 - 1e-3);
  }
  CHECK_THROWS_AS(density_grid(11, 0.9995), std::invalid_argument);
  CHECK_THROWS_AS(density_grid(11, 1.0), std::invalid_argument);
}

TEST_CASE("doubling change shrinks for Legendre") {
  const std::vector<double> xs = {-0.7, 0.0, 0.3};
  std::vector<std::vector<double>> changes;
  for (std::size_t N : {500, 1000, 2000, 4000}) {
    changes.push_back(estimate_density(build(FamilyKind::Legendre), N, xs).doubling_change);
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(changes.back()[i] < changes.front()[i]);
  }
}

TEST_CASE("built-in families give positive limits") {
  const auto xs = density_grid();
  for (const auto& fam :
       {build(FamilyKind::Legendre), build(FamilyKind::ChebyshevT), build(FamilyKind::ChebyshevU),
        build(FamilyKind::Gegenbauer, {{"lambda", q(3, 2)}}), build(FamilyKind::Example3, {{"a", q(1)}}),
        build(FamilyKind::Pollaczek, {{"lambda", q(1)}, {"a", q(1, 2)}})}) {
    CAPTURE(fam.name());
    const auto est = estimate_density(fam, 200, xs);
    CHECK(est.all_valid());
    CHECK(est.offdiag_converged);
    for (double w : est.density) {
      CHECK(w > 0);
    }
  }
}

TEST_CASE("off-diagonals away from 1/2 are flagged") {
  const CoefficientFamily narrow("narrow", {},
                                 Sequence::exact([](std::size_t n) { return n == 0 ? Rational(0) : Rational(1, 4); }),
                                 Sequence::constant(Number(q(1, 4))));
  const auto est = estimate_density(narrow, 50, std::vector<double>{0.0, 0.25});
  CHECK_FALSE(est.offdiag_converged);
  CHECK_FALSE(est.warnings.empty());
}

TEST_CASE("bounded-variation partial sum") {
  const auto est = estimate_density(build(FamilyKind::Legendre), 100, std::vector<double>{0.0});
  CHECK(est.variation_within_cap);
  CHECK(est.variation_partial_sum > 0);
  CHECK(est.variation_partial_sum < 0.2);
}

TEST_CASE("degree below 10 is rejected") {
  CHECK_THROWS(estimate_density(build(FamilyKind::Legendre), 9, std::vector<double>{0.0}));
}

TEST_CASE("density_from_limit") { CHECK(density_from_limit(0.0, 1.0) == doctest::Approx(2 / std::numbers::pi)); }
