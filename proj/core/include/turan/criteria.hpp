#ifndef TURAN_CRITERIA_HPP
#define TURAN_CRITERIA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turan/number.hpp"
#include "turan/recurrence.hpp"
#include "turan/sequence.hpp"

namespace turan {

enum class Criterion { Theorem1, SzwTheorem1, Corollary1, Corollary2, LambdaRoute, YRoute };
enum class Verdict { Satisfied, Violated, Inconclusive };
enum class ConditionStatus { Holds, Violated, Inconclusive };

const char* to_string(Criterion c);
const char* to_string(Verdict v);
std::optional<Criterion> criterion_from_string(std::string_view name);

/// The comparison that failed, as evaluated. `evaluate()` recomputes it.
struct Witness {
  Number lhs;
  Number rhs;
  Relation relation = Relation::LessEqual;
  double margin = 0.0;

  bool evaluate() const { return compare(lhs, rhs, relation, margin); }
};

/// One hypothesis checked over the whole horizon. A violation takes precedence
/// over an inconclusive index when both occur.
struct Condition {
  std::string label;
  ConditionStatus status = ConditionStatus::Holds;
  std::optional<std::size_t> first_violation;
  std::optional<Witness> witness;
  std::optional<std::size_t> first_inconclusive;
  std::string note;

  bool holds() const { return status == ConditionStatus::Holds; }
};

struct CriterionReport {
  Criterion criterion = Criterion::Theorem1;
  std::size_t checked_up_to = 0;
  std::vector<Condition> conditions;
  /// Reported alongside the verdict but not part of it.
  std::vector<Condition> auxiliary;
  Verdict overall = Verdict::Inconclusive;
  bool exact = false;
  std::vector<std::string> notes;

  const Condition* find(std::string_view label) const;
  const Condition& at(std::string_view label) const;
};

/// Satisfied iff every condition holds; Violated if any is violated.
Verdict combine(const std::vector<Condition>& conditions);

/// Tail handling for "delta_n decreases to 0" on a finite horizon.
struct TailOptions {
  double threshold = 1e-6;
  /// Index at which a closed-form delta is sampled for the tail bound.
  std::size_t probe_index = 1'000'000'000;
};

/// Hypotheses (a)-(c) and inequalities (2)-(3) for 0 <= n <= N. Conditions:
/// "a.increasing", "a.bounded", "b.positive", "b.decreasing", "c", "ineq2", "ineq3".
CriterionReport check_theorem1(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options = {});

/// alpha~_n nondecreasing and alpha~_n <= 1/2 for n <= N, for polynomials
/// normalized at 1. Conditions: "alpha.nondecreasing", "alpha.bounded".
CriterionReport check_szw_normalized(const NormalizedFamily<Number>& nf, std::size_t N, double margin = 1e-14);

/// alpha_n = 1/2 - alpha delta_n, gamma_n = 1/2 + gamma delta_n.
struct CorollaryShape {
  Number alpha;
  Number gamma;
  Sequence delta;
};

/// Conditions "alpha>=gamma", "gamma>0", "delta.decreasing", "delta.positive",
/// "delta.tail", "alpha*delta0=1/2". Only a failed tail bound yields Inconclusive.
/// The tail is sampled at the last table entry, or at max(N, probe_index) for
/// closed-form delta.
CriterionReport check_corollary1(const CorollaryShape& shape, std::size_t N, const ArithmeticOptions& options = {},
                                 const TailOptions& tail = {});
/// Same, after confirming `family` matches the shape; throws StructuralMismatch otherwise.
CriterionReport check_corollary1(const CoefficientFamily& family, const CorollaryShape& shape, std::size_t N,
                                 const ArithmeticOptions& options = {}, const TailOptions& tail = {});

/// Conditions "alpha>=gamma", "gamma>0", "delta.decreasing", "delta.positive",
/// "delta.tail", "delta0.lower", "delta0.upper" (the window (3g-a)/(2g(a+g)) <= delta_0 <= 1/(2a)).
CriterionReport check_corollary2(const CorollaryShape& shape, std::size_t N, const ArithmeticOptions& options = {},
                                 const TailOptions& tail = {});
CriterionReport check_corollary2(const CoefficientFamily& family, const CorollaryShape& shape, std::size_t N,
                                 const ArithmeticOptions& options = {}, const TailOptions& tail = {});

/// Family coefficients generated by the shape for 0 <= n <= N, to `tolerance`.
/// Corollary 2 pins alpha_0 = 0 and gamma_0 = 1/2 + gamma delta_0.
bool matches_corollary1(const CoefficientFamily& family, const CorollaryShape& shape, std::size_t N,
                        double tolerance = 1e-14);
bool matches_corollary2(const CoefficientFamily& family, const CorollaryShape& shape, std::size_t N,
                        double tolerance = 1e-14);

/// u_n = alpha_{n+1} - alpha_n, v_n = gamma_n - gamma_{n+1}, lambda_n = v_n/u_n,
/// y_n = (1 + lambda_n)/(1 - lambda_n), for 0 <= n <= N. An entry is valid when
/// u_n > 0, v_n > 0 and lambda_n <= 1.
struct LambdaData {
  std::vector<Number> u;
  std::vector<Number> v;
  std::vector<std::optional<Number>> lambda;
  std::vector<std::optional<Number>> y;
  std::vector<bool> valid;
  bool exact = false;
};

LambdaData lambda_data(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options = {});

/// f(x) = (1 + x)/(3 - x).
template <Scalar T>
T lambda_map(const T& x) {
  return (T(1) + x) / (T(3) - x);
}

/// Ratio (gamma_n - 1/2)/(1/2 - alpha_n) nondecreasing ("ratio7.nondecreasing"),
/// lambda_n <= f(lambda_{n-1}) ("lambda.f"), conjoined with the Theorem 1
/// conditions other than inequality (2). The lambda <= 1/3 shortcut is reported
/// as auxiliary.
CriterionReport check_lambda_route(const CoefficientFamily& family, std::size_t N,
                                   const ArithmeticOptions& options = {});

/// As the lambda route, with "y.increment": y_n <= y_{n-1} + 1 in place of "lambda.f".
CriterionReport check_y_route(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options = {});

/// Lemma bounds on g_n: 1 <= g_n <= (alpha_{n+1} gamma_n - alpha_n gamma_{n+1})/(gamma_n - gamma_{n+1})
/// ("sandwich.lower", "sandwich.upper") and g_{n+1} <= g_n ("monotone"), n <= N.
/// A vanishing gamma difference makes the upper bound +infinity.
struct LemmaReport {
  std::vector<Number> g;
  std::vector<std::optional<Number>> upper;  // nullopt for +infinity
  std::vector<Condition> conditions;
  bool exact = false;

  bool holds() const;
};

LemmaReport check_lemma_bounds(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options = {});

}  // namespace turan

#endif  // TURAN_CRITERIA_HPP
