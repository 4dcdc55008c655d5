#include "turan/criteria.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace turan {

namespace {

/// Records the first failing index of one condition. Floating comparisons are
/// evaluated through the witness so that a stored witness always reproduces
/// the verdict.
class Tracker {
 public:
  Tracker(std::string label, double margin) : margin_(margin) { condition_.label = std::move(label); }

  template <Scalar T>
  bool check(std::size_t n, const T& lhs, const T& rhs, Relation relation) {
    Witness w{Number::from(lhs), Number::from(rhs), relation, is_exact_v<T> ? 0.0 : margin_};
    const bool ok = w.evaluate();
    if (!ok && !condition_.first_violation) {
      condition_.first_violation = n;
      condition_.witness = std::move(w);
    }
    return ok;
  }

  /// Records an index where the comparison is undefined.
  void inconclusive(std::size_t n, std::string note = {}) {
    if (!condition_.first_inconclusive) {
      condition_.first_inconclusive = n;
      if (!note.empty()) {
        condition_.note = std::move(note);
      }
    }
  }

  /// A failed comparison that only makes the condition inconclusive.
  template <Scalar T>
  void check_soft(std::size_t n, const T& lhs, const T& rhs, Relation relation, std::string note) {
    Witness w{Number::from(lhs), Number::from(rhs), relation, is_exact_v<T> ? 0.0 : margin_};
    if (!w.evaluate() && !condition_.first_inconclusive) {
      condition_.first_inconclusive = n;
      condition_.witness = std::move(w);
      condition_.note = std::move(note);
    }
  }

  Condition finish() && {
    if (condition_.first_violation) {
      condition_.status = ConditionStatus::Violated;
    } else if (condition_.first_inconclusive) {
      condition_.status = ConditionStatus::Inconclusive;
    }
    return std::move(condition_);
  }

 private:
  Condition condition_;
  double margin_;
};

template <Scalar T>
std::vector<T> fetch(const Sequence& s, std::size_t count) {
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(s.at<T>(n));
  }
  return out;
}

template <Scalar T>
T half() {
  return T(1) / T(2);
}

template <Scalar T>
std::vector<Condition> theorem1_conditions(const CoefficientFamily& family, std::size_t N, double margin) {
  const auto alpha = fetch<T>(family.alpha(), N + 2);
  const auto gamma = fetch<T>(family.gamma(), N + 2);
  const T zero(0);
  const T one(1);

  Tracker a_inc("a.increasing", margin);
  Tracker a_bound("a.bounded", margin);
  Tracker b_pos("b.positive", margin);
  Tracker b_dec("b.decreasing", margin);
  Tracker c("c", margin);
  Tracker ineq2("ineq2", margin);
  Tracker ineq3("ineq3", margin);

  for (std::size_t n = 0; n <= N; ++n) {
    if (n >= 1) {
      a_inc.check(n, alpha[n - 1], alpha[n], Relation::Less);
      b_dec.check(n, gamma[n], gamma[n - 1], Relation::Less);
    }
    a_bound.check(n, alpha[n], half<T>(), Relation::LessEqual);
    b_pos.check(n, zero, gamma[n], Relation::Less);
    c.check(n, T(alpha[n] + gamma[n]), one, Relation::LessEqual);
  }
  for (std::size_t n = 1; n <= N; ++n) {
    const T left_den = alpha[n] * gamma[n - 1] - alpha[n - 1] * gamma[n];
    const T right_den = gamma[n] - gamma[n + 1];
    if (!(left_den > 0) || !(right_den > 0)) {
      ineq2.inconclusive(n, "denominator not positive at n = " + std::to_string(n));
      continue;
    }
    const T lhs = (alpha[n] - alpha[n - 1]) / left_den;
    const T rhs = (alpha[n + 1] * gamma[n] - alpha[n] * gamma[n + 1]) / right_den;
    ineq2.check(n, lhs, rhs, Relation::LessEqual);
  }
  ineq3.check(0, T(gamma[0] - gamma[1]), T(alpha[1] * gamma[0] * gamma[0]), Relation::LessEqual);

  std::vector<Condition> out;
  out.push_back(std::move(a_inc).finish());
  out.push_back(std::move(a_bound).finish());
  out.push_back(std::move(b_pos).finish());
  out.push_back(std::move(b_dec).finish());
  out.push_back(std::move(c).finish());
  out.push_back(std::move(ineq2).finish());
  out.push_back(std::move(ineq3).finish());
  return out;
}

CriterionReport make_report(Criterion criterion, std::size_t N, bool exact, std::vector<Condition> conditions) {
  CriterionReport report;
  report.criterion = criterion;
  report.checked_up_to = N;
  report.exact = exact;
  report.conditions = std::move(conditions);
  report.overall = combine(report.conditions);
  return report;
}

Arithmetic resolve_shape(const CorollaryShape& shape, const ArithmeticOptions& options) {
  const bool exact = shape.alpha.is_exact() && shape.gamma.is_exact() && shape.delta.is_exact();
  const Arithmetic floating = options.precision == FloatPrecision::Extended ? Arithmetic::Extended : Arithmetic::Double;
  if (options.mode == ArithmeticMode::Float) {
    return floating;
  }
  if (options.mode == ArithmeticMode::Rational && !exact) {
    throw ParamError("rational mode requested for a non-rational corollary parametrization");
  }
  return exact ? Arithmetic::Exact : floating;
}

template <Scalar T>
std::vector<Condition> corollary_common(const CorollaryShape& shape, std::size_t N, double margin,
                                        const TailOptions& tail) {
  const T alpha = shape.alpha.as<T>();
  const T gamma = shape.gamma.as<T>();
  const auto delta = fetch<T>(shape.delta, N + 1);

  Tracker order("alpha>=gamma", margin);
  order.check(0, gamma, alpha, Relation::LessEqual);
  Tracker positive("gamma>0", margin);
  positive.check(0, T(0), gamma, Relation::Less);

  Tracker decreasing("delta.decreasing", margin);
  for (std::size_t n = 0; n < N; ++n) {
    decreasing.check(n + 1, delta[n + 1], delta[n], Relation::Less);
  }

  std::size_t probe = std::max(N, tail.probe_index);
  if (const auto len = shape.delta.length()) {
    probe = *len - 1;
  }
  const T delta_probe = shape.delta.at<T>(probe);
  Tracker delta_positive("delta.positive", margin);
  delta_positive.check(probe, T(0), delta_probe, Relation::Less);
  Tracker tail_bound("delta.tail", margin);
  tail_bound.check_soft(probe, delta_probe, from_rational<T>(Rational(tail.threshold)), Relation::Less,
                        "delta has not reached the tail threshold; the limit 0 is unverified");

  std::vector<Condition> out;
  out.push_back(std::move(order).finish());
  out.push_back(std::move(positive).finish());
  out.push_back(std::move(decreasing).finish());
  out.push_back(std::move(delta_positive).finish());
  out.push_back(std::move(tail_bound).finish());
  return out;
}

template <Scalar T>
std::vector<Condition> corollary1_conditions(const CorollaryShape& shape, std::size_t N, double margin,
                                             const TailOptions& tail) {
  auto out = corollary_common<T>(shape, N, margin, tail);
  Tracker normalization("alpha*delta0=1/2", margin);
  normalization.check(0, T(shape.alpha.as<T>() * shape.delta.at<T>(0)), half<T>(), Relation::Equal);
  out.push_back(std::move(normalization).finish());
  return out;
}

template <Scalar T>
std::vector<Condition> corollary2_conditions(const CorollaryShape& shape, std::size_t N, double margin,
                                             const TailOptions& tail) {
  auto out = corollary_common<T>(shape, N, margin, tail);
  const T alpha = shape.alpha.as<T>();
  const T gamma = shape.gamma.as<T>();
  const T delta0 = shape.delta.at<T>(0);
  Tracker lower("delta0.lower", margin);
  Tracker upper("delta0.upper", margin);
  if (gamma > 0 && alpha + gamma > 0) {
    lower.check(0, T((T(3) * gamma - alpha) / (T(2) * gamma * (alpha + gamma))), delta0, Relation::LessEqual);
  } else {
    lower.inconclusive(0, "window undefined for nonpositive gamma");
  }
  if (alpha > 0) {
    upper.check(0, delta0, T(T(1) / (T(2) * alpha)), Relation::LessEqual);
  } else {
    upper.inconclusive(0, "window undefined for nonpositive alpha");
  }
  out.push_back(std::move(lower).finish());
  out.push_back(std::move(upper).finish());
  return out;
}

template <Scalar T>
bool matches_shape(const CoefficientFamily& family, const CorollaryShape& shape, std::size_t N, double tolerance,
                   bool pinned_start) {
  const T alpha = shape.alpha.as<T>();
  const T gamma = shape.gamma.as<T>();
  auto close = [&](const T& a, const T& b) {
    if constexpr (is_exact_v<T>) {
      return a == b;
    } else {
      const T scale = std::max(T(1), std::max(abs_value(a), abs_value(b)));
      return abs_value(T(a - b)) <= static_cast<T>(tolerance) * scale;
    }
  };
  for (std::size_t n = 0; n <= N; ++n) {
    const T d = shape.delta.at<T>(n);
    const T want_alpha = (pinned_start && n == 0) ? T(0) : T(half<T>() - alpha * d);
    const T want_gamma = half<T>() + gamma * d;
    if (!close(family.alpha_at<T>(n), want_alpha) || !close(family.gamma_at<T>(n), want_gamma)) {
      return false;
    }
  }
  return true;
}

bool matches(const CoefficientFamily& family, const CorollaryShape& shape, std::size_t N, double tolerance,
             bool pinned_start) {
  const bool exact = family.exact() && shape.alpha.is_exact() && shape.gamma.is_exact() && shape.delta.is_exact();
  return exact ? matches_shape<Rational>(family, shape, N, tolerance, pinned_start)
               : matches_shape<long double>(family, shape, N, tolerance, pinned_start);
}

/// Per-index lambda table in the working scalar.
template <Scalar T>
struct LambdaTable {
  std::vector<T> u;
  std::vector<T> v;
  std::vector<std::optional<T>> lambda;
  std::vector<std::optional<T>> y;
  std::vector<bool> valid;
};

template <Scalar T>
LambdaTable<T> lambda_table(const CoefficientFamily& family, std::size_t N) {
  const auto alpha = fetch<T>(family.alpha(), N + 2);
  const auto gamma = fetch<T>(family.gamma(), N + 2);
  LambdaTable<T> t;
  for (std::size_t n = 0; n <= N; ++n) {
    T u = alpha[n + 1] - alpha[n];
    T v = gamma[n] - gamma[n + 1];
    std::optional<T> lambda;
    std::optional<T> y;
    bool valid = false;
    if (u > 0 && v > 0) {
      lambda = T(v / u);
      valid = *lambda <= 1;
      if (*lambda < 1) {
        y = T((T(1) + *lambda) / (T(1) - *lambda));
      }
    }
    t.u.push_back(std::move(u));
    t.v.push_back(std::move(v));
    t.lambda.push_back(std::move(lambda));
    t.y.push_back(std::move(y));
    t.valid.push_back(valid);
  }
  return t;
}

template <Scalar T>
Condition ratio7_condition(const CoefficientFamily& family, std::size_t N, double margin) {
  Tracker tracker("ratio7.nondecreasing", margin);
  std::vector<std::optional<T>> ratio;
  for (std::size_t n = 0; n <= N + 1; ++n) {
    const T denom = half<T>() - family.alpha_at<T>(n);
    if (denom > 0) {
      ratio.emplace_back(T((family.gamma_at<T>(n) - half<T>()) / denom));
    } else {
      ratio.emplace_back(std::nullopt);
    }
  }
  for (std::size_t n = 0; n <= N; ++n) {
    if (!ratio[n] || !ratio[n + 1]) {
      tracker.inconclusive(n + 1, "alpha_n >= 1/2 leaves the ratio undefined");
      continue;
    }
    tracker.check(n + 1, *ratio[n], *ratio[n + 1], Relation::LessEqual);
  }
  return std::move(tracker).finish();
}

enum class Route { Lambda, Y };

template <Scalar T>
CriterionReport route_report(const CoefficientFamily& family, std::size_t N, double margin, Route route) {
  std::vector<Condition> conditions;
  for (auto& c : theorem1_conditions<T>(family, N, margin)) {
    if (c.label != "ineq2") {
      conditions.push_back(std::move(c));
    }
  }
  conditions.push_back(ratio7_condition<T>(family, N, margin));

  const auto table = lambda_table<T>(family, N);
  Tracker shortcut("lambda<=1/3", margin);
  if (route == Route::Lambda) {
    Tracker tracker("lambda.f", margin);
    for (std::size_t n = 1; n <= N; ++n) {
      if (!table.valid[n] || !table.valid[n - 1]) {
        tracker.inconclusive(n, "lambda undefined or outside (0, 1]");
        continue;
      }
      tracker.check(n, *table.lambda[n], lambda_map(*table.lambda[n - 1]), Relation::LessEqual);
    }
    conditions.push_back(std::move(tracker).finish());
  } else {
    Tracker tracker("y.increment", margin);
    for (std::size_t n = 1; n <= N; ++n) {
      if (!table.valid[n] || !table.valid[n - 1] || !table.y[n] || !table.y[n - 1]) {
        tracker.inconclusive(n, "y undefined where lambda = 1 or lambda invalid");
        continue;
      }
      tracker.check(n, *table.y[n], T(*table.y[n - 1] + T(1)), Relation::LessEqual);
    }
    conditions.push_back(std::move(tracker).finish());
  }
  for (std::size_t n = 1; n <= N; ++n) {
    if (!table.valid[n]) {
      shortcut.inconclusive(n);
      continue;
    }
    shortcut.check(n, *table.lambda[n], T(T(1) / T(3)), Relation::LessEqual);
  }

  auto report = make_report(route == Route::Lambda ? Criterion::LambdaRoute : Criterion::YRoute, N, is_exact_v<T>,
                            std::move(conditions));
  report.auxiliary.push_back(std::move(shortcut).finish());
  return report;
}

template <Scalar T>
LemmaReport lemma_report(const CoefficientFamily& family, std::size_t N, double margin, std::size_t digit_cap) {
  const auto g = ratios_at_one<T>(family, N + 2, digit_cap).values;
  const auto alpha = fetch<T>(family.alpha(), N + 2);
  const auto gamma = fetch<T>(family.gamma(), N + 2);

  LemmaReport report;
  report.exact = is_exact_v<T>;
  Tracker lower("sandwich.lower", margin);
  Tracker upper("sandwich.upper", margin);
  Tracker monotone("monotone", margin);
  for (std::size_t n = 0; n <= N; ++n) {
    report.g.push_back(Number::from(g[n]));
    lower.check(n, T(1), g[n], Relation::LessEqual);
    const T den = gamma[n] - gamma[n + 1];
    if (den > 0) {
      const T bound = (alpha[n + 1] * gamma[n] - alpha[n] * gamma[n + 1]) / den;
      report.upper.emplace_back(Number::from(bound));
      upper.check(n, g[n], bound, Relation::LessEqual);
    } else {
      report.upper.emplace_back(std::nullopt);
    }
    monotone.check(n, g[n + 1], g[n], Relation::LessEqual);
  }
  report.conditions.push_back(std::move(lower).finish());
  report.conditions.push_back(std::move(upper).finish());
  report.conditions.push_back(std::move(monotone).finish());
  return report;
}

}  // namespace

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::Theorem1:
      return "Theorem1";
    case Criterion::SzwTheorem1:
      return "SzwTheorem1";
    case Criterion::Corollary1:
      return "Corollary1";
    case Criterion::Corollary2:
      return "Corollary2";
    case Criterion::LambdaRoute:
      return "LambdaRoute";
    case Criterion::YRoute:
      return "YRoute";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfied:
      return "Satisfied";
    case Verdict::Violated:
      return "Violated";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::optional<Criterion> criterion_from_string(std::string_view name) {
  for (Criterion c : {Criterion::Theorem1, Criterion::SzwTheorem1, Criterion::Corollary1, Criterion::Corollary2,
                      Criterion::LambdaRoute, Criterion::YRoute}) {
    if (name == to_string(c)) {
      return c;
    }
  }
  return std::nullopt;
}

const Condition* CriterionReport::find(std::string_view label) const {
  for (const auto& c : conditions) {
    if (c.label == label) {
      return &c;
    }
  }
  for (const auto& c : auxiliary) {
    if (c.label == label) {
      return &c;
    }
  }
  return nullptr;
}

const Condition& CriterionReport::at(std::string_view label) const {
  if (const auto* c = find(label)) {
    return *c;
  }
  throw std::out_of_range("no condition labeled '" + std::string(label) + "'");
}

Verdict combine(const std::vector<Condition>& conditions) {
  bool inconclusive = false;
  for (const auto& c : conditions) {
    if (c.status == ConditionStatus::Violated) {
      return Verdict::Violated;
    }
    inconclusive = inconclusive || c.status == ConditionStatus::Inconclusive;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::Satisfied;
}

CriterionReport check_theorem1(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options) {
  if (N < 2) {
    throw ParamError("check_theorem1 needs N >= 2");
  }
  return dispatch(resolve_arithmetic(family, options), [&](auto tag) {
    using T = typename decltype(tag)::type;
    return make_report(Criterion::Theorem1, N, is_exact_v<T>, theorem1_conditions<T>(family, N, options.margin));
  });
}

CriterionReport check_szw_normalized(const NormalizedFamily<Number>& nf, std::size_t N, double margin) {
  if (nf.size() <= N) {
    throw std::invalid_argument("normalized family holds " + std::to_string(nf.size()) + " terms, need " +
                                std::to_string(N + 1));
  }
  const double m = nf.exact ? 0.0 : margin;
  Condition nondecreasing;
  nondecreasing.label = "alpha.nondecreasing";
  Condition bounded;
  bounded.label = "alpha.bounded";
  auto record = [m](Condition& c, std::size_t n, const Number& lhs, const Number& rhs) {
    Witness w{lhs, rhs, Relation::LessEqual, lhs.is_exact() && rhs.is_exact() ? 0.0 : m};
    if (!c.first_violation && !w.evaluate()) {
      c.first_violation = n;
      c.witness = std::move(w);
      c.status = ConditionStatus::Violated;
    }
  };
  const Number half_value(Rational(1, 2));
  for (std::size_t n = 0; n <= N; ++n) {
    if (n >= 1) {
      record(nondecreasing, n, nf.alpha_tilde[n - 1], nf.alpha_tilde[n]);
    }
    const Number bound = nf.alpha_tilde[n].is_exact() ? half_value : Number(0.5L);
    record(bounded, n, nf.alpha_tilde[n], bound);
  }
  return make_report(Criterion::SzwTheorem1, N, nf.exact, {std::move(nondecreasing), std::move(bounded)});
}

CriterionReport check_corollary1(const CorollaryShape& shape, std::size_t N, const ArithmeticOptions& options,
                                 const TailOptions& tail) {
  if (N < 2) {
    throw ParamError("check_corollary1 needs N >= 2");
  }
  return dispatch(resolve_shape(shape, options), [&](auto tag) {
    using T = typename decltype(tag)::type;
    return make_report(Criterion::Corollary1, N, is_exact_v<T>,
                       corollary1_conditions<T>(shape, N, options.margin, tail));
  });
}

CriterionReport check_corollary1(const CoefficientFamily& family, const CorollaryShape& shape, std::size_t N,
                                 const ArithmeticOptions& options, const TailOptions& tail) {
  if (!matches_corollary1(family, shape, N)) {
    throw StructuralMismatch("family '" + family.name() + "' is not of the form alpha_n = 1/2 - " +
                             shape.alpha.to_string() + " delta_n, gamma_n = 1/2 + " + shape.gamma.to_string() +
                             " delta_n");
  }
  return check_corollary1(shape, N, options, tail);
}

CriterionReport check_corollary2(const CorollaryShape& shape, std::size_t N, const ArithmeticOptions& options,
                                 const TailOptions& tail) {
  if (N < 2) {
    throw ParamError("check_corollary2 needs N >= 2");
  }
  return dispatch(resolve_shape(shape, options), [&](auto tag) {
    using T = typename decltype(tag)::type;
    return make_report(Criterion::Corollary2, N, is_exact_v<T>,
                       corollary2_conditions<T>(shape, N, options.margin, tail));
  });
}

CriterionReport check_corollary2(const CoefficientFamily& family, const CorollaryShape& shape, std::size_t N,
                                 const ArithmeticOptions& options, const TailOptions& tail) {
  if (!matches_corollary2(family, shape, N)) {
    throw StructuralMismatch("family '" + family.name() + "' is not of the shifted-start form with alpha = " +
                             shape.alpha.to_string() + ", gamma = " + shape.gamma.to_string());
  }
  return check_corollary2(shape, N, options, tail);
}

bool matches_corollary1(const CoefficientFamily& family, const CorollaryShape& shape, std::size_t N, double tolerance) {
  return matches(family, shape, N, tolerance, false);
}

bool matches_corollary2(const CoefficientFamily& family, const CorollaryShape& shape, std::size_t N, double tolerance) {
  return matches(family, shape, N, tolerance, true);
}

LambdaData lambda_data(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options) {
  return dispatch(resolve_arithmetic(family, options), [&](auto tag) {
    using T = typename decltype(tag)::type;
    const auto table = lambda_table<T>(family, N);
    LambdaData out;
    out.exact = is_exact_v<T>;
    auto opt = [](const std::optional<T>& v) -> std::optional<Number> {
      if (v) {
        return Number::from(*v);
      }
      return std::nullopt;
    };
    for (std::size_t n = 0; n <= N; ++n) {
      out.u.push_back(Number::from(table.u[n]));
      out.v.push_back(Number::from(table.v[n]));
      out.lambda.push_back(opt(table.lambda[n]));
      out.y.push_back(opt(table.y[n]));
      out.valid.push_back(table.valid[n]);
    }
    return out;
  });
}

CriterionReport check_lambda_route(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options) {
  if (N < 2) {
    throw ParamError("check_lambda_route needs N >= 2");
  }
  return dispatch(resolve_arithmetic(family, options), [&](auto tag) {
    using T = typename decltype(tag)::type;
    return route_report<T>(family, N, options.margin, Route::Lambda);
  });
}

CriterionReport check_y_route(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options) {
  if (N < 2) {
    throw ParamError("check_y_route needs N >= 2");
  }
  return dispatch(resolve_arithmetic(family, options), [&](auto tag) {
    using T = typename decltype(tag)::type;
    return route_report<T>(family, N, options.margin, Route::Y);
  });
}

bool LemmaReport::holds() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.holds(); });
}

LemmaReport check_lemma_bounds(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options) {
  const Arithmetic arithmetic = resolve_arithmetic(family, options);
  if (arithmetic == Arithmetic::Exact) {
    try {
      return lemma_report<Rational>(family, N, options.margin, options.digit_cap);
    } catch (const RationalBlowUp&) {
      return lemma_report<long double>(family, N, options.margin, options.digit_cap);
    }
  }
  return dispatch(arithmetic, [&](auto tag) {
    using T = typename decltype(tag)::type;
    return lemma_report<T>(family, N, options.margin, options.digit_cap);
  });
}

}  // namespace turan
