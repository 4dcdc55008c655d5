#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "random_families.hpp"
#include "turan/criteria.hpp"
#include "turan/families.hpp"
#include "turan/io.hpp"
#include "turan/scan.hpp"

using namespace turan;
using oracle::q;

namespace {

constexpr int kTrials = 25;

CoefficientFamily random_closed_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  const Rational a = oracle::random_rational(rng, 1, 40, 8);
  const Rational b = oracle::random_rational(rng, 0, 40, 8);
  switch (pick(rng)) {
    case 0:
      return build(FamilyKind::Example3, {{"a", a}});
    case 1:
      return build(FamilyKind::Example4, {{"a", a}, {"b", b}});
    case 2:
      return build(FamilyKind::Pollaczek, {{"lambda", Rational(a + b)}, {"a", a}});
    default:
      return build(FamilyKind::Gegenbauer, {{"lambda", a}});
  }
}

/// Arbitrary positive table, with no monotonicity built in.
CoefficientFamily random_table(std::mt19937_64& rng, std::size_t length) {
  std::vector<Number> alpha{Number(0)}, gamma{Number(oracle::random_rational(rng, 1, 20, 20))};
  for (std::size_t n = 1; n < length; ++n) {
    alpha.emplace_back(oracle::random_rational(rng, 1, 12, 20));
    gamma.emplace_back(oracle::random_rational(rng, 1, 12, 20));
  }
  return CoefficientFamily::from_tables("table", alpha, gamma);
}

}  // namespace

TEST_CASE("property: normalized coefficients sum to one and P_n(1) = 1") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < kTrials; ++t) {
    const auto fam = random_closed_form(rng);
    CAPTURE(fam.name());
    const auto nf = normalize<Rational>(fam, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      CHECK(nf.alpha_tilde[n] + nf.gamma_tilde[n] == 1);
    }
    for (const auto& v : eval_polys<Rational>(nf.as_family(), 30, Rational(1))) {
      CHECK(v == 1);
    }
  }
}

TEST_CASE("property: parity p_n(-x) = (-1)^n p_n(x)") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < kTrials; ++t) {
    const auto fam = random_closed_form(rng);
    const Rational x = oracle::random_rational(rng, -30, 30, 31);
    const auto plus = eval_polys<Rational>(fam, 20, x);
    const auto minus = eval_polys<Rational>(fam, 20, Rational(-x));
    for (std::size_t n = 0; n <= 20; ++n) {
      CHECK(minus[n] == (n % 2 == 0 ? plus[n] : Rational(-plus[n])));
    }
  }
}

TEST_CASE("property: floating evaluation tracks exact evaluation") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < kTrials; ++t) {
    const auto fam = random_closed_form(rng);
    const Rational x = oracle::random_rational(rng, -64, 64, 64);
    const auto exact = eval_polys<Rational>(fam, 40, x);
    const auto approx = eval_polys<double>(fam, 40, x.get_d());
    const auto ext = eval_polys<long double>(fam, 40, static_cast<long double>(x.get_d()));
    for (std::size_t n = 0; n <= 40; ++n) {
      const double scale = std::max(1.0, std::abs(exact[n].get_d()));
      CHECK(std::abs(approx[n] - exact[n].get_d()) <= 1e-11 * scale);
      CHECK(std::abs(static_cast<double>(ext[n]) - exact[n].get_d()) <= 1e-11 * scale);
    }
  }
}

TEST_CASE("property: stored witnesses reproduce their verdicts") {
  std::mt19937_64 rng(14);
  int violations = 0;
  for (int t = 0; t < 60; ++t) {
    const auto fam = random_table(rng, 12);
    for (const auto& report : {check_theorem1(fam, 10), check_lambda_route(fam, 9), check_y_route(fam, 9)}) {
      for (const auto& c : report.conditions) {
        if (c.status == ConditionStatus::Violated) {
          ++violations;
          REQUIRE(c.witness);
          CHECK_FALSE(c.witness->evaluate());
        }
      }
      CHECK(report.overall == combine(report.conditions));
    }
  }
  CHECK(violations > 0);
}

TEST_CASE("property: Theorem 1 certificates imply nonnegative scans") {
  std::mt19937_64 rng(15);
  int certified = 0;
  for (int t = 0; t < kTrials; ++t) {
    const auto fam = random_closed_form(rng);
    CAPTURE(fam.name());
    if (check_theorem1(fam, 60).overall != Verdict::Satisfied) {
      continue;
    }
    ++certified;
    CHECK(grid_scan(fam, 60, 301, true).all_nonnegative());
  }
  CHECK(certified > kTrials / 2);
}

TEST_CASE("property: Corollary 2 window") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < kTrials; ++t) {
    const Rational gamma = oracle::random_rational(rng, 1, 20, 10);
    const Rational alpha = gamma + oracle::random_rational(rng, 0, 20, 10);
    const Rational lower = (3 * gamma - alpha) / (2 * gamma * (alpha + gamma));
    const Rational upper = 1 / (2 * alpha);
    std::uniform_int_distribution<long> frac(1, 99);
    Rational delta0 =
        (lower > 0 ? lower : Rational(0)) + (upper - (lower > 0 ? lower : Rational(0))) * q(frac(rng), 100);
    if (!(delta0 > 0) || !(alpha * delta0 < 1)) {
      continue;
    }
    const auto fam = build(FamilyKind::Corollary2, {{"alpha", alpha}, {"gamma", gamma}, {"delta0", delta0}});
    const auto hint = corollary_shape(fam);
    REQUIRE(hint);
    const auto report = check_corollary2(fam, hint->shape, 80);
    CHECK(report.overall == Verdict::Satisfied);
    CHECK(grid_scan(fam, 80, 301, true).all_nonnegative());
  }
}

TEST_CASE("property: lambda and y routes agree on monotone random families") {
  std::mt19937_64 rng(17);
  int compared = 0;
  for (int t = 0; t < 40; ++t) {
    const auto fam = oracle::random_monotone_family(rng, 25);
    const auto data = lambda_data(fam, 20);
    if (std::find(data.valid.begin(), data.valid.end(), false) != data.valid.end()) {
      continue;
    }
    ++compared;
    for (std::size_t n = 1; n <= 20; ++n) {
      const Rational l = data.lambda[n]->exact();
      const Rational prev = data.lambda[n - 1]->exact();
      const bool by_f = l <= lambda_map(prev);
      const bool by_y = data.y[n]->exact() <= data.y[n - 1]->exact() + 1;
      CHECK(by_f == by_y);
    }
    const auto lr = check_lambda_route(fam, 20);
    const auto yr = check_y_route(fam, 20);
    CHECK(lr.at("ratio7.nondecreasing").holds());
    CHECK(lr.at("lambda.f").first_violation == yr.at("y.increment").first_violation);
    CHECK(lr.overall == yr.overall);
  }
  CHECK(compared > 10);
}

TEST_CASE("property: lemma bounds for certified families") {
  std::mt19937_64 rng(18);
  for (int t = 0; t < kTrials; ++t) {
    const auto fam = random_closed_form(rng);
    if (check_theorem1(fam, 80).overall != Verdict::Satisfied) {
      continue;
    }
    const auto report = check_lemma_bounds(fam, 80);
    CHECK(report.holds());
    for (std::size_t n = 0; n + 1 < report.g.size(); ++n) {
      CHECK(report.g[n + 1].exact() <= report.g[n].exact());
    }
  }
}

TEST_CASE("property: JSON keeps rationals exact") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int t = 0; t < 200; ++t) {
    Rational x(d(rng), std::abs(d(rng)) + 1);
    x.canonicalize();
    CHECK(number_from_json(to_json(Number(x))).exact() == x);
  }
}

TEST_CASE("property: determinants assembled from p_n(x) and p_n(1)") {
  std::mt19937_64 rng(20);
  for (int t = 0; t < 10; ++t) {
    const auto fam = random_closed_form(rng);
    const auto g = ratios_at_one<Rational>(fam, 12);
    for (std::size_t n = 1; n <= 10; ++n) {
      const Rational x = oracle::random_rational(rng, -20, 20, 21);
      const Rational raw = turan_det<Rational>(fam, n, x, false);
      const Rational norm = turan_det<Rational>(fam, n, x, true);
      const auto p = eval_polys<Rational>(fam, n + 1, x);
      const auto one = eval_polys<Rational>(fam, n + 1, Rational(1));
      CHECK(norm == p[n] * p[n] / (one[n] * one[n]) - p[n - 1] * p[n + 1] / (one[n - 1] * one[n + 1]));
      CHECK(raw == p[n] * p[n] - p[n - 1] * p[n + 1]);
      CHECK(one[n + 1] / one[n] == g.values[n]);
    }
  }
}
