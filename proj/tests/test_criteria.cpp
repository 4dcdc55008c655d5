#include <doctest.h>

#include "oracles.hpp"
#include "turan/criteria.hpp"
#include "turan/families.hpp"

using namespace turan;
using oracle::q;

namespace {

CoefficientFamily example3(const Rational& a) { return build(FamilyKind::Example3, {{"a", a}}); }

CoefficientFamily example4(const Rational& a, const Rational& b) {
  return build(FamilyKind::Example4, {{"a", a}, {"b", b}});
}

Sequence harmonic(const Rational& scale, long shift) {
  return Sequence::exact([scale, shift](std::size_t n) { return Rational(scale / (static_cast<long>(n) + shift)); });
}

}  // namespace

TEST_CASE("Theorem 1 on Example-3 a=1") {
  const auto fam = example3(q(1));
  const auto report = check_theorem1(fam, 100);
  CHECK(report.overall == Verdict::Satisfied);
  CHECK(report.exact);
  CHECK(report.checked_up_to == 100);
  for (const char* label : {"a.increasing", "a.bounded", "b.positive", "b.decreasing", "c", "ineq2", "ineq3"}) {
    CHECK(report.at(label).holds());
  }
  // Both sides of inequality (2) at n = 1, from the coefficient formulas by hand.
  const Rational a0 = 0, a1 = q(1, 4), a2 = q(1, 3);
  const Rational g0 = q(3, 4), g1 = q(2, 3), g2 = q(5, 8);
  CHECK(fam.alpha_at<Rational>(2) == a2);
  CHECK(fam.gamma_at<Rational>(2) == g2);
  const Rational lhs = (a1 - a0) / (a1 * g0 - a0 * g1);
  const Rational rhs = (a2 * g1 - a1 * g2) / (g1 - g2);
  CHECK(lhs == q(4, 3));
  CHECK(rhs == q(19, 12));
}

TEST_CASE("Theorem 1 fails its strictness hypotheses on Chebyshev-T") {
  const auto report = check_theorem1(build(FamilyKind::ChebyshevT), 10);
  CHECK(report.overall == Verdict::Violated);
  const auto& a = report.at("a.increasing");
  const auto& b = report.at("b.decreasing");
  REQUIRE(a.first_violation);
  REQUIRE(b.first_violation);
  CHECK(*a.first_violation == 2);
  CHECK(*b.first_violation == 2);
  REQUIRE(a.witness);
  CHECK(a.witness->lhs.exact() == q(1, 2));
  CHECK(a.witness->rhs.exact() == q(1, 2));
  CHECK(a.witness->relation == Relation::Less);
  CHECK_FALSE(a.witness->evaluate());
}

TEST_CASE("Theorem 1 rejects tiny horizons") { CHECK_THROWS_AS(check_theorem1(example3(q(1)), 1), ParamError); }

TEST_CASE("Theorem 1 in floating mode agrees with exact mode") {
  ArithmeticOptions opts;
  opts.mode = ArithmeticMode::Float;
  for (const auto& fam : {example3(q(1, 2)), example4(q(2), q(1, 2)), build(FamilyKind::ChebyshevT)}) {
    const auto exact = check_theorem1(fam, 80);
    const auto approx = check_theorem1(fam, 80, opts);
    CHECK_FALSE(approx.exact);
    CHECK(exact.overall == approx.overall);
  }
}

TEST_CASE("Szwarc-type check on normalized coefficients") {
  SUBCASE("normalized Example-3") {
    const auto nf = normalize(example3(q(1)), 100);
    CHECK(check_szw_normalized(nf, 100).overall == Verdict::Satisfied);
  }
  SUBCASE("Legendre is already normalized") {
    const auto nf = normalize(build(FamilyKind::Legendre), 1000);
    for (std::size_t n = 0; n <= 1000; n += 97) {
      CHECK(nf.alpha_tilde[n].exact() == q(static_cast<long>(n), 2 * static_cast<long>(n) + 1));
    }
    CHECK(check_szw_normalized(nf, 1000).overall == Verdict::Satisfied);
  }
  SUBCASE("injected violation") {
    auto nf = normalize(build(FamilyKind::Legendre), 10);
    nf.alpha_tilde[3] = Number(q(51, 100));
    nf.gamma_tilde[3] = Number(q(49, 100));
    const auto report = check_szw_normalized(nf, 10);
    CHECK(report.overall == Verdict::Violated);
    const auto& bounded = report.at("alpha.bounded");
    REQUIRE(bounded.first_violation);
    CHECK(*bounded.first_violation == 3);
    CHECK(bounded.witness->lhs.exact() == q(51, 100));
    CHECK(bounded.witness->rhs.exact() == q(1, 2));
  }
}

TEST_CASE("Corollary 1") {
  SUBCASE("Pollaczek lambda=1, a=1/2") {
    // delta_n = 1/(2n+3)
    const CorollaryShape pollaczek{Number(q(3, 2)), Number(q(1, 2)), Sequence::exact([](std::size_t n) {
                                     return Rational(1, 2 * static_cast<long>(n) + 3);
                                   })};
    const auto report = check_corollary1(pollaczek, 100);
    CHECK(report.overall == Verdict::Satisfied);
    CHECK(q(3, 2) * q(1, 3) == q(1, 2));
    const auto fam = build(FamilyKind::Pollaczek, {{"lambda", q(1)}, {"a", q(1, 2)}});
    CHECK(matches_corollary1(fam, pollaczek, 100));
    CHECK(check_corollary1(fam, pollaczek, 100).overall == Verdict::Satisfied);
  }
  SUBCASE("boundary alpha = gamma") {
    const CorollaryShape shape{Number(1), Number(1), harmonic(q(1, 2), 1)};
    CHECK(check_corollary1(shape, 100).overall == Verdict::Satisfied);
  }
  SUBCASE("alpha < gamma") {
    const CorollaryShape shape{Number(1), Number(2), harmonic(q(1, 2), 1)};
    const auto report = check_corollary1(shape, 100);
    CHECK(report.overall == Verdict::Violated);
    CHECK_FALSE(report.at("alpha>=gamma").holds());
  }
  SUBCASE("alpha delta_0 must be 1/2") {
    const CorollaryShape shape{Number(2), Number(1), harmonic(q(1, 2), 1)};
    CHECK_FALSE(check_corollary1(shape, 50).at("alpha*delta0=1/2").holds());
  }
  SUBCASE("a table delta that has not decayed is inconclusive") {
    std::vector<Number> delta;
    for (long n = 0; n <= 20; ++n) {
      delta.push_back(Number(q(1, 2 * (n + 1))));
    }
    const CorollaryShape shape{Number(1), Number(1), Sequence::table(delta)};
    const auto report = check_corollary1(shape, 20);
    CHECK(report.at("delta.tail").status == ConditionStatus::Inconclusive);
    CHECK(report.overall == Verdict::Inconclusive);
  }
  SUBCASE("family that does not follow the shape") {
    const CorollaryShape shape{Number(q(3, 2)), Number(q(1, 2)), harmonic(q(1, 2), 1)};
    CHECK_THROWS_AS(check_corollary1(example3(q(1)), shape, 20), StructuralMismatch);
  }
}

TEST_CASE("Corollary 2") {
  const auto fifth = q(1, 5);
  SUBCASE("delta_0 inside the window [1/6, 1/4]") {
    const CorollaryShape shape{Number(2), Number(1), harmonic(fifth, 1)};
    const auto report = check_corollary2(shape, 100);
    CHECK(report.overall == Verdict::Satisfied);
    const Rational lower = (3 * q(1) - 2) / (2 * q(1) * (2 + 1));
    CHECK(lower == q(1, 6));
    CHECK(q(1) / (2 * 2) == q(1, 4));
    const auto fam = build(FamilyKind::Corollary2, {{"alpha", q(2)}, {"gamma", q(1)}, {"delta0", fifth}});
    CHECK(matches_corollary2(fam, shape, 100));
    CHECK(check_corollary2(fam, shape, 100).overall == Verdict::Satisfied);
    CHECK_FALSE(matches_corollary1(fam, shape, 100));
  }
  SUBCASE("delta_0 past 1/(2 alpha)") {
    const CorollaryShape shape{Number(2), Number(1), harmonic(q(3, 10), 1)};
    const auto report = check_corollary2(shape, 100);
    CHECK(report.overall == Verdict::Violated);
    CHECK_FALSE(report.at("delta0.upper").holds());
    CHECK(report.at("delta0.lower").holds());
  }
  SUBCASE("delta_0 below the window") {
    const CorollaryShape shape{Number(2), Number(1), harmonic(q(1, 10), 1)};
    CHECK_FALSE(check_corollary2(shape, 100).at("delta0.lower").holds());
  }
}

TEST_CASE("lambda data") {
  SUBCASE("Example-3 a=1") {
    const auto data = lambda_data(example3(q(1)), 100);
    REQUIRE(data.exact);
    CHECK(data.lambda[0]->exact() == q(1, 3));
    CHECK(data.lambda[1]->exact() == q(1, 2));
    for (long n = 0; n <= 100; ++n) {
      CHECK(data.lambda[n]->exact() == q(n + 1, n + 3));
      CHECK(data.y[n]->exact() == n + 2);
      CHECK(data.valid[n]);
    }
  }
  SUBCASE("Example-3 closed forms for u, v, lambda") {
    for (const Rational a : {q(1, 2), q(3), q(7, 3)}) {
      const auto data = lambda_data(example3(a), 40);
      for (long n = 0; n <= 40; ++n) {
        CHECK(data.u[n].exact() == a / (2 * (n + a) * (n + a + 1)));
        CHECK(data.v[n].exact() == a / (2 * (n + a + 1) * (n + a + 2)));
        CHECK(data.lambda[n]->exact() == (n + a) / (n + a + 2));
      }
    }
  }
  SUBCASE("Corollary-1 shape gives constant lambda = gamma/alpha") {
    const auto fam = build(FamilyKind::Pollaczek, {{"lambda", q(2)}, {"a", q(1)}});
    const auto data = lambda_data(fam, 50);
    for (std::size_t n = 1; n <= 50; ++n) {
      CHECK(data.lambda[n]->exact() == q(1, 3));
    }
  }
  SUBCASE("Example-4 with b=0 reduces to Example 3") {
    const auto data = lambda_data(example4(q(1), q(0)), 30);
    for (long n = 0; n <= 30; ++n) {
      CHECK(data.y[n]->exact() == n + 2);
    }
  }
  SUBCASE("Example-4 a=1, b=1") {
    const auto data = lambda_data(example4(q(1), q(1)), 100);
    for (long n = 0; n <= 100; ++n) {
      CHECK(data.y[n]->exact() == q(n, 2) + q(5, 4) + q(3, 4 * (2 * n + 5)));
      CHECK(data.y[n]->exact() == oracle::example4_y(n, q(1), q(1)));
    }
  }
  SUBCASE("lambda = 1 leaves y undefined") {
    const auto data = lambda_data(build(FamilyKind::Legendre), 10);
    CHECK(data.lambda[3]->exact() == 1);
    CHECK_FALSE(data.y[3]);
  }
}

TEST_CASE("the map f") {
  CHECK(lambda_map(Rational(1)) == 1);
  CHECK(lambda_map(q(1, 3)) == q(1, 2));
  CHECK(lambda_map(0.0) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("lambda route") {
  SUBCASE("Example 3 is boundary-tight for every a") {
    for (const Rational a : {q(1, 2), q(1), q(3), q(7, 3)}) {
      const auto data = lambda_data(example3(a), 60);
      for (std::size_t n = 1; n <= 60; ++n) {
        CHECK(lambda_map(data.lambda[n - 1]->exact()) == data.lambda[n]->exact());
      }
      const auto report = check_lambda_route(example3(a), 60);
      CHECK(report.overall == Verdict::Satisfied);
      CHECK(report.find("ineq2") == nullptr);
    }
  }
  SUBCASE("Example 2 stays under 1/3") {
    const auto fam = build(FamilyKind::Example2, {{"eps0", q(1, 12)}, {"ratio", q(1, 2)}});
    const auto report = check_lambda_route(fam, 100);
    CHECK(report.overall == Verdict::Satisfied);
    REQUIRE_FALSE(report.auxiliary.empty());
    CHECK(report.auxiliary.front().label == "lambda<=1/3");
    CHECK(report.auxiliary.front().holds());
  }
  SUBCASE("Chebyshev-T violates the hypotheses") {
    CHECK(check_lambda_route(build(FamilyKind::ChebyshevT), 20).overall == Verdict::Violated);
  }
}

TEST_CASE("y route") {
  SUBCASE("Example 4 a=1, b=1") {
    const auto report = check_y_route(example4(q(1), q(1)), 100);
    CHECK(report.overall == Verdict::Satisfied);
    CHECK(report.at("y.increment").holds());
  }
  SUBCASE("Example 3 increments are exactly 1") {
    CHECK(check_y_route(example3(q(1)), 100).overall == Verdict::Satisfied);
  }
  SUBCASE("constant lambda") {
    const auto fam = build(FamilyKind::Corollary1, {{"alpha", q(2)}, {"gamma", q(1)}});
    const auto data = lambda_data(fam, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      CHECK(data.y[n]->exact() == 3);
    }
    CHECK(check_y_route(fam, 30).at("y.increment").holds());
  }
}

TEST_CASE("lemma bounds on g_n") {
  for (const auto& fam :
       {example3(q(1)), example4(q(2), q(1, 2)), build(FamilyKind::Pollaczek, {{"lambda", q(1)}, {"a", q(1, 2)}})}) {
    const auto report = check_lemma_bounds(fam, 100);
    CHECK(report.exact);
    CHECK(report.holds());
    REQUIRE(report.g.size() == 101);
    const auto g = ratios_at_one<Rational>(fam, 101);
    for (std::size_t n = 0; n <= 100; ++n) {
      CHECK(report.g[n].exact() == g.values[n]);
      CHECK(1 <= g.values[n]);
    }
  }
  SUBCASE("constant gamma tail gives an infinite upper bound") {
    const auto report = check_lemma_bounds(build(FamilyKind::ChebyshevT), 5);
    CHECK_FALSE(report.upper[2]);
  }
}

TEST_CASE("criterion names") {
  for (auto c : {Criterion::Theorem1, Criterion::SzwTheorem1, Criterion::Corollary1, Criterion::Corollary2,
                 Criterion::LambdaRoute, Criterion::YRoute}) {
    CHECK(criterion_from_string(to_string(c)) == c);
  }
  CHECK_FALSE(criterion_from_string("Nope"));
  CHECK(combine({}) == Verdict::Satisfied);
}
