#include "turan/families.hpp"

#include <stdexcept>
#include <type_traits>
#include <utility>

namespace turan {

namespace {

const Number& require(const Params& params, const std::string& key, FamilyKind kind) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw ParamError(std::string(to_string(kind)) + " requires parameter '" + key + "'");
  }
  return it->second;
}

bool positive(const Number& x) { return compare(Number(0), x, Relation::Less, 0.0); }
bool nonnegative(const Number& x) { return compare(Number(0), x, Relation::LessEqual, 0.0); }

/// Wraps a formula `f(std::type_identity<T>, n)` into an exact or real sequence.
template <class F>
Sequence formula(bool exact, F f) {
  if (exact) {
    return Sequence::exact([f](std::size_t n) { return f(std::type_identity<Rational>{}, n); },
                           [f](std::size_t n) { return f(std::type_identity<long double>{}, n); });
  }
  return Sequence::real([f](std::size_t n) { return f(std::type_identity<long double>{}, n); });
}

/// A parameter with its extended-precision value computed once.
struct Coef {
  Number value;
  long double approx;

  template <Scalar T>
  T as() const {
    if constexpr (is_exact_v<T>) {
      return value.exact();
    } else {
      return static_cast<T>(approx);
    }
  }
};

Coef coef(const Number& x) { return Coef{x, x.approx()}; }

bool all_exact(const Params& params) {
  for (const auto& [key, value] : params) {
    if (!value.is_exact()) {
      return false;
    }
  }
  return true;
}

template <Scalar T>
T idx(std::size_t n) {
  if constexpr (is_exact_v<T>) {
    return Rational(static_cast<unsigned long>(n));
  } else {
    return static_cast<T>(n);
  }
}

template <Scalar T>
T power(const T& base, std::size_t n) {
  if constexpr (is_exact_v<T>) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), n);
    return Rational(num, den);
  } else {
    return std::pow(base, static_cast<T>(n));
  }
}

CoefficientFamily build_example2(const FamilySpec& spec) {
  const FamilyKind kind = FamilyKind::Example2;
  const Rational sixth(1, 6);
  Sequence eps;
  Sequence delta;
  Params params = spec.params;
  if (!spec.epsilon.empty() || !spec.delta.empty()) {
    if (spec.epsilon.size() != spec.delta.size() || spec.epsilon.size() < 2) {
      throw ParamError("Example2 tables epsilon and delta must have equal length >= 2");
    }
    for (std::size_t n = 0; n < spec.epsilon.size(); ++n) {
      if (!positive(spec.epsilon[n])) {
        throw ParamError("Example2 requires epsilon_n > 0 (n = " + std::to_string(n) + ")");
      }
      if (!nonnegative(spec.delta[n])) {
        throw ParamError("Example2 requires delta_n >= 0 (n = " + std::to_string(n) + ")");
      }
      if (n > 0 && !compare(spec.epsilon[n], spec.epsilon[n - 1], Relation::Less, 0.0)) {
        throw ParamError("Example2 requires epsilon strictly decreasing (n = " + std::to_string(n) + ")");
      }
      if (n > 0 && !compare(spec.delta[n], spec.delta[n - 1], Relation::LessEqual, 0.0)) {
        throw ParamError("Example2 requires delta nonincreasing (n = " + std::to_string(n) + ")");
      }
    }
    const Number start = spec.epsilon[0].is_exact() && spec.delta[0].is_exact()
                             ? Number(Rational(spec.epsilon[0].exact() * (1 + spec.delta[0].exact())))
                             : Number(spec.epsilon[0].approx() * (1.0L + spec.delta[0].approx()));
    if (!compare(start, Number(sixth), Relation::Equal, 1e-14)) {
      throw ParamError("Example2 requires eps_0 (1 + delta_0) = 1/6 (forced by alpha_0 = 0)");
    }
    eps = Sequence::table(spec.epsilon);
    delta = Sequence::table(spec.delta);
  } else {
    const Number eps0 = require(params, "eps0", kind);
    const Number ratio = require(params, "ratio", kind);
    if (!positive(eps0) || !compare(eps0, Number(sixth), Relation::LessEqual, 0.0)) {
      throw ParamError("Example2 requires 0 < eps0 <= 1/6 so that delta_0 = 1/(6 eps0) - 1 >= 0");
    }
    if (!positive(ratio) || !compare(ratio, Number(1), Relation::Less, 0.0)) {
      throw ParamError("Example2 requires 0 < ratio < 1 for a strictly decreasing epsilon");
    }
    const bool exact = eps0.is_exact() && ratio.is_exact();
    eps = formula(exact, [eps0 = coef(eps0), ratio = coef(ratio)](auto tag, std::size_t n) {
      using T = typename decltype(tag)::type;
      return T(eps0.as<T>() * power(ratio.as<T>(), n));
    });
    delta = formula(exact, [eps0 = coef(eps0)](auto tag, std::size_t n) {
      using T = typename decltype(tag)::type;
      const T c = T(1) / (T(6) * eps0.as<T>()) - T(1);
      return T(c / (idx<T>(n) + T(1)));
    });
  }
  const bool exact = eps.is_exact() && delta.is_exact();
  auto alpha = formula(exact, [eps, delta](auto tag, std::size_t n) {
    using T = typename decltype(tag)::type;
    if (n == 0) {
      return T(0);
    }
    return T(T(1) / T(2) - T(3) * eps.at<T>(n) * (T(1) + delta.at<T>(n)));
  });
  auto gamma = formula(exact, [eps](auto tag, std::size_t n) {
    using T = typename decltype(tag)::type;
    return T(T(1) / T(2) + eps.at<T>(n));
  });
  const std::optional<std::size_t> len = eps.length();
  if (len) {
    alpha = exact ? Sequence::exact([alpha](std::size_t n) { return alpha.exact_at(n); },
                                    [alpha](std::size_t n) { return alpha.real_at(n); }, len)
                  : Sequence::real([alpha](std::size_t n) { return alpha.real_at(n); }, len);
  }
  return CoefficientFamily(to_string(kind), std::move(params), std::move(alpha), std::move(gamma));
}

}  // namespace

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ChebyshevT:
      return "ChebyshevT";
    case FamilyKind::ChebyshevU:
      return "ChebyshevU";
    case FamilyKind::Legendre:
      return "Legendre";
    case FamilyKind::Gegenbauer:
      return "Gegenbauer";
    case FamilyKind::Pollaczek:
      return "Pollaczek";
    case FamilyKind::Example2:
      return "Example2";
    case FamilyKind::Example3:
      return "Example3";
    case FamilyKind::Example4:
      return "Example4";
    case FamilyKind::Corollary1:
      return "Corollary1";
    case FamilyKind::Corollary2:
      return "Corollary2";
    case FamilyKind::Table:
      return "Table";
  }
  return "?";
}

std::optional<FamilyKind> family_kind_from_string(std::string_view name) {
  for (const auto& info : family_kinds()) {
    if (name == to_string(info.kind)) {
      return info.kind;
    }
  }
  if (name == "table") {
    return FamilyKind::Table;
  }
  return std::nullopt;
}

const std::vector<FamilyKindInfo>& family_kinds() {
  static const std::vector<FamilyKindInfo> kinds = {
      {FamilyKind::ChebyshevT, "", "", "gamma_0 = 1, alpha_n = gamma_n = 1/2 (n >= 1)"},
      {FamilyKind::ChebyshevU, "", "", "alpha_n = n/(2(n+1)), gamma_n = (n+2)/(2(n+1))"},
      {FamilyKind::Legendre, "", "", "alpha_n = n/(2n+1), gamma_n = (n+1)/(2n+1)"},
      {FamilyKind::Gegenbauer, "lambda", "lambda > 0",
       "alpha_n = n/(2(n+lambda)), gamma_n = (n+2lambda)/(2(n+lambda))"},
      {FamilyKind::Pollaczek, "lambda, a", "lambda > 0, a > 0",
       "alpha_n = n/(2(n+lambda+a)), gamma_n = (n+2lambda)/(2(n+lambda+a))"},
      {FamilyKind::Example2, "eps0, ratio | epsilon[], delta[]",
       "0 < eps0 <= 1/6, 0 < ratio < 1; tables: epsilon strictly decreasing > 0, delta nonincreasing >= 0, "
       "eps_0 (1 + delta_0) = 1/6",
       "alpha_n = 1/2 - 3 eps_n (1 + delta_n), gamma_n = 1/2 + eps_n"},
      {FamilyKind::Example3, "a", "a > 0", "alpha_n = 1/2 - a/(2(n+a)), gamma_n = 1/2 + a/(2(n+a+1))"},
      {FamilyKind::Example4, "a, b", "a > 0, b >= 0", "alpha_n = 1/2 - a/(2(n+a)), gamma_n = 1/2 + a/(2(n+a+b+1))"},
      {FamilyKind::Corollary1, "alpha, gamma", "alpha > 0, gamma > 0",
       "alpha_n = 1/2 - alpha delta_n, gamma_n = 1/2 + gamma delta_n, delta_n = 1/(2 alpha (n+1))"},
      {FamilyKind::Corollary2, "alpha, gamma, delta0", "alpha > 0, gamma > 0, 0 < alpha delta0 < 1",
       "alpha_0 = 0, gamma_0 = 1/2 + gamma delta0; alpha_n = 1/2 - alpha delta_n, gamma_n = 1/2 + gamma delta_n, "
       "delta_n = delta0/(n+1)"},
      {FamilyKind::Table, "alpha[], gamma[]", "alpha_0 = 0, alpha_n > 0 (n >= 1), gamma_n > 0, equal lengths",
       "explicit finite tables"},
  };
  return kinds;
}

CoefficientFamily build(FamilyKind kind, Params params) {
  FamilySpec spec;
  spec.kind = kind;
  spec.params = std::move(params);
  return build(spec);
}

CoefficientFamily build(const FamilySpec& spec) {
  const FamilyKind kind = spec.kind;
  const std::string name = to_string(kind);
  const Params& params = spec.params;
  const bool exact = all_exact(params);

  switch (kind) {
    case FamilyKind::ChebyshevT:
      return CoefficientFamily(name, params,
                               formula(true,
                                       [](auto tag, std::size_t n) {
                                         using T = typename decltype(tag)::type;
                                         return n == 0 ? T(0) : T(T(1) / T(2));
                                       }),
                               formula(true, [](auto tag, std::size_t n) {
                                 using T = typename decltype(tag)::type;
                                 return n == 0 ? T(1) : T(T(1) / T(2));
                               }));
    case FamilyKind::ChebyshevU:
      return CoefficientFamily(name, params,
                               formula(true,
                                       [](auto tag, std::size_t n) {
                                         using T = typename decltype(tag)::type;
                                         return T(idx<T>(n) / (T(2) * (idx<T>(n) + T(1))));
                                       }),
                               formula(true, [](auto tag, std::size_t n) {
                                 using T = typename decltype(tag)::type;
                                 return T((idx<T>(n) + T(2)) / (T(2) * (idx<T>(n) + T(1))));
                               }));
    case FamilyKind::Legendre:
      return CoefficientFamily(name, params,
                               formula(true,
                                       [](auto tag, std::size_t n) {
                                         using T = typename decltype(tag)::type;
                                         return T(idx<T>(n) / (T(2) * idx<T>(n) + T(1)));
                                       }),
                               formula(true, [](auto tag, std::size_t n) {
                                 using T = typename decltype(tag)::type;
                                 return T((idx<T>(n) + T(1)) / (T(2) * idx<T>(n) + T(1)));
                               }));
    case FamilyKind::Gegenbauer: {
      const Number lambda = require(params, "lambda", kind);
      if (!positive(lambda)) {
        throw ParamError("Gegenbauer requires lambda > 0");
      }
      return CoefficientFamily(name, params,
                               formula(exact,
                                       [lambda = coef(lambda)](auto tag, std::size_t n) {
                                         using T = typename decltype(tag)::type;
                                         return T(idx<T>(n) / (T(2) * (idx<T>(n) + lambda.as<T>())));
                                       }),
                               formula(exact, [lambda = coef(lambda)](auto tag, std::size_t n) {
                                 using T = typename decltype(tag)::type;
                                 const T l = lambda.as<T>();
                                 return T((idx<T>(n) + T(2) * l) / (T(2) * (idx<T>(n) + l)));
                               }));
    }
    case FamilyKind::Pollaczek: {
      const Number lambda = require(params, "lambda", kind);
      const Number a = require(params, "a", kind);
      if (!positive(lambda)) {
        throw ParamError("Pollaczek requires lambda > 0");
      }
      if (!positive(a)) {
        throw ParamError("Pollaczek requires a > 0");
      }
      return CoefficientFamily(name, params,
                               formula(exact,
                                       [lambda = coef(lambda), a = coef(a)](auto tag, std::size_t n) {
                                         using T = typename decltype(tag)::type;
                                         return T(idx<T>(n) / (T(2) * (idx<T>(n) + lambda.as<T>() + a.as<T>())));
                                       }),
                               formula(exact, [lambda = coef(lambda), a = coef(a)](auto tag, std::size_t n) {
                                 using T = typename decltype(tag)::type;
                                 const T l = lambda.as<T>();
                                 return T((idx<T>(n) + T(2) * l) / (T(2) * (idx<T>(n) + l + a.as<T>())));
                               }));
    }
    case FamilyKind::Example2:
      return build_example2(spec);
    case FamilyKind::Example3:
    case FamilyKind::Example4: {
      const Number a = require(params, "a", kind);
      if (!positive(a)) {
        throw ParamError(name + " requires a > 0");
      }
      Number b(0);
      if (kind == FamilyKind::Example4) {
        b = require(params, "b", kind);
        if (!nonnegative(b)) {
          throw ParamError("Example4 requires b >= 0");
        }
      }
      return CoefficientFamily(name, params,
                               formula(exact,
                                       [a = coef(a)](auto tag, std::size_t n) {
                                         using T = typename decltype(tag)::type;
                                         const T av = a.as<T>();
                                         return T(T(1) / T(2) - av / (T(2) * (idx<T>(n) + av)));
                                       }),
                               formula(exact, [a = coef(a), b = coef(b)](auto tag, std::size_t n) {
                                 using T = typename decltype(tag)::type;
                                 const T av = a.as<T>();
                                 return T(T(1) / T(2) + av / (T(2) * (idx<T>(n) + av + b.as<T>() + T(1))));
                               }));
    }
    case FamilyKind::Corollary1:
    case FamilyKind::Corollary2: {
      const Number alpha = require(params, "alpha", kind);
      const Number gamma = require(params, "gamma", kind);
      if (!positive(alpha) || !positive(gamma)) {
        throw ParamError(name + " requires alpha > 0 and gamma > 0");
      }
      const bool pinned = kind == FamilyKind::Corollary2;
      Number delta0;
      if (pinned) {
        delta0 = require(params, "delta0", kind);
        const Number product = delta0.is_exact() && alpha.is_exact() ? Number(Rational(delta0.exact() * alpha.exact()))
                                                                     : Number(delta0.approx() * alpha.approx());
        if (!positive(delta0) || !compare(product, Number(1), Relation::Less, 0.0)) {
          throw ParamError("Corollary2 requires delta0 > 0 and alpha delta0 < 1 so that alpha_n > 0");
        }
      }
      auto delta = [alpha = coef(alpha), delta0 = coef(delta0), pinned](auto tag, std::size_t n) {
        using T = typename decltype(tag)::type;
        const T d0 = pinned ? delta0.as<T>() : T(T(1) / (T(2) * alpha.as<T>()));
        return T(d0 / (idx<T>(n) + T(1)));
      };
      return CoefficientFamily(name, params,
                               formula(exact,
                                       [alpha = coef(alpha), delta, pinned](auto tag, std::size_t n) {
                                         using T = typename decltype(tag)::type;
                                         if (pinned && n == 0) {
                                           return T(0);
                                         }
                                         return T(T(1) / T(2) - alpha.as<T>() * delta(tag, n));
                                       }),
                               formula(exact, [gamma = coef(gamma), delta](auto tag, std::size_t n) {
                                 using T = typename decltype(tag)::type;
                                 return T(T(1) / T(2) + gamma.as<T>() * delta(tag, n));
                               }));
    }
    case FamilyKind::Table:
      return CoefficientFamily::from_tables(name, spec.alpha, spec.gamma);
  }
  throw ParamError("unknown family kind");
}

std::optional<ShapeHint> corollary_shape(const CoefficientFamily& family) {
  const auto kind = family_kind_from_string(family.name());
  if (!kind) {
    return std::nullopt;
  }
  const Params& params = family.params();
  const bool exact = all_exact(params);
  switch (*kind) {
    case FamilyKind::Pollaczek: {
      const Number lambda = params.at("lambda");
      const Number a = params.at("a");
      if (!compare(a, lambda, Relation::Less, 0.0)) {
        return std::nullopt;
      }
      auto sum = [&](auto tag) {
        using T = typename decltype(tag)::type;
        return Number::from(T(lambda.as<T>() + a.as<T>()));
      };
      auto diff = [&](auto tag) {
        using T = typename decltype(tag)::type;
        return Number::from(T(lambda.as<T>() - a.as<T>()));
      };
      const Number alpha = exact ? sum(std::type_identity<Rational>{}) : sum(std::type_identity<long double>{});
      const Number gamma = exact ? diff(std::type_identity<Rational>{}) : diff(std::type_identity<long double>{});
      Sequence delta = formula(exact, [lambda = coef(lambda), a = coef(a)](auto tag, std::size_t n) {
        using T = typename decltype(tag)::type;
        return T(T(1) / (T(2) * (idx<T>(n) + lambda.as<T>() + a.as<T>())));
      });
      return ShapeHint{Criterion::Corollary1, CorollaryShape{alpha, gamma, std::move(delta)}};
    }
    case FamilyKind::Corollary1: {
      const Number alpha = params.at("alpha");
      Sequence delta = formula(exact, [alpha = coef(alpha)](auto tag, std::size_t n) {
        using T = typename decltype(tag)::type;
        return T(T(1) / (T(2) * alpha.as<T>() * (idx<T>(n) + T(1))));
      });
      return ShapeHint{Criterion::Corollary1, CorollaryShape{alpha, params.at("gamma"), std::move(delta)}};
    }
    case FamilyKind::Corollary2: {
      const Number delta0 = params.at("delta0");
      Sequence delta = formula(exact, [delta0 = coef(delta0)](auto tag, std::size_t n) {
        using T = typename decltype(tag)::type;
        return T(delta0.as<T>() / (idx<T>(n) + T(1)));
      });
      return ShapeHint{Criterion::Corollary2, CorollaryShape{params.at("alpha"), params.at("gamma"), std::move(delta)}};
    }
    default:
      return std::nullopt;
  }
}

Classification run_criteria(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options) {
  if (N < 2) {
    throw ParamError("run_criteria needs N >= 2");
  }
  Classification out;
  out.reports.push_back(check_theorem1(family, N, options));
  try {
    out.reports.push_back(check_szw_normalized(normalize(family, N, options), N, options.margin));
  } catch (const NonpositiveRatio& e) {
    CriterionReport report;
    report.criterion = Criterion::SzwTheorem1;
    report.checked_up_to = N;
    report.overall = Verdict::Inconclusive;
    report.notes.emplace_back(e.what());
    out.reports.push_back(std::move(report));
  }
  out.reports.push_back(check_lambda_route(family, N, options));
  out.reports.push_back(check_y_route(family, N, options));
  if (const auto hint = corollary_shape(family)) {
    if (hint->criterion == Criterion::Corollary1) {
      out.reports.push_back(check_corollary1(family, hint->shape, N, options));
    } else {
      out.reports.push_back(check_corollary2(family, hint->shape, N, options));
    }
  }
  if (family.name() == to_string(FamilyKind::Pollaczek) &&
      compare(family.params().at("lambda"), family.params().at("a"), Relation::LessEqual, 0.0)) {
    out.unchecked.emplace_back(
        "Pollaczek with a >= lambda falls under an earlier criterion for gamma_0 >= 1 that is not checked here");
  }
  for (const auto& report : out.reports) {
    if (report.overall == Verdict::Satisfied) {
      out.certified.push_back(report.criterion);
    }
  }
  return out;
}

std::vector<Criterion> classify(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options) {
  return run_criteria(family, N, options).certified;
}

}  // namespace turan
