#include "turan/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace turan {

namespace {

void check_table_entries(const std::vector<Number>& alpha, const std::vector<Number>& gamma) {
  if (alpha.empty() || alpha.size() != gamma.size()) {
    throw ParamError("alpha and gamma tables must be nonempty and of equal length");
  }
  for (std::size_t n = 1; n < alpha.size(); ++n) {
    if (!compare(Number(0), alpha[n], Relation::Less, 0.0)) {
      throw ParamError("alpha_" + std::to_string(n) + " must be positive");
    }
  }
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    if (!compare(Number(0), gamma[n], Relation::Less, 0.0)) {
      throw ParamError("gamma_" + std::to_string(n) + " must be positive");
    }
  }
}

template <Scalar T>
void guard(const T& value, std::size_t cap) {
  if constexpr (is_exact_v<T>) {
    guard_digits(value, cap);
  }
}

}  // namespace

CoefficientFamily::CoefficientFamily(std::string name, Params params, Sequence alpha, Sequence gamma)
    : name_(std::move(name)), params_(std::move(params)), alpha_(std::move(alpha)), gamma_(std::move(gamma)) {
  if (alpha_.number_at(0) != Number(0)) {
    throw ParamError("alpha_0 must be 0 (recurrence convention alpha_0 = p_{-1} = 0)");
  }
  if (!compare(Number(0), gamma_.number_at(0), Relation::Less, 0.0)) {
    throw ParamError("gamma_0 must be positive");
  }
}

CoefficientFamily CoefficientFamily::from_tables(std::string name, const std::vector<Number>& alpha,
                                                 const std::vector<Number>& gamma) {
  if (!alpha.empty() && alpha.front() != Number(0)) {
    throw ParamError("alpha_0 must be 0 (recurrence convention alpha_0 = p_{-1} = 0)");
  }
  check_table_entries(alpha, gamma);
  return CoefficientFamily(std::move(name), {}, Sequence::table(alpha), Sequence::table(gamma));
}

std::optional<std::size_t> CoefficientFamily::size() const {
  const auto a = alpha_.length();
  const auto g = gamma_.length();
  if (a && g) {
    return std::min(*a, *g);
  }
  return a ? a : g;
}

Arithmetic resolve_arithmetic(const CoefficientFamily& family, const ArithmeticOptions& options) {
  const Arithmetic floating = options.precision == FloatPrecision::Extended ? Arithmetic::Extended : Arithmetic::Double;
  switch (options.mode) {
    case ArithmeticMode::Rational:
      if (!family.exact()) {
        throw ParamError("rational mode requested for family '" + family.name() + "' with non-rational coefficients");
      }
      return Arithmetic::Exact;
    case ArithmeticMode::Float:
      return floating;
    case ArithmeticMode::Auto:
      break;
  }
  return family.exact() ? Arithmetic::Exact : floating;
}

const char* to_string(Arithmetic a) {
  switch (a) {
    case Arithmetic::Exact:
      return "rational";
    case Arithmetic::Double:
      return "double";
    case Arithmetic::Extended:
      return "extended";
  }
  return "?";
}

void guard_digits(const Rational& q, std::size_t cap) {
  const std::size_t digits = digit_count(q);
  if (digits > cap) {
    throw RationalBlowUp(digits, cap);
  }
}

template <Scalar T>
std::vector<T> eval_polys(const CoefficientFamily& family, std::size_t n_max, const T& x, std::size_t digit_cap) {
  std::vector<T> p;
  p.reserve(n_max + 1);
  p.emplace_back(1);
  if (n_max == 0) {
    return p;
  }
  p.push_back(x / family.gamma_at<T>(0));
  for (std::size_t n = 1; n < n_max; ++n) {
    T next = (x * p[n] - family.alpha_at<T>(n) * p[n - 1]) / family.gamma_at<T>(n);
    guard(next, digit_cap);
    p.push_back(std::move(next));
  }
  return p;
}

template <Scalar T>
RatioSequence<T> ratios_at_one(const CoefficientFamily& family, std::size_t count, std::size_t digit_cap) {
  RatioSequence<T> out;
  out.exact = is_exact_v<T>;
  if (count == 0) {
    return out;
  }
  out.values.reserve(count);
  out.values.push_back(T(1) / family.gamma_at<T>(0));
  for (std::size_t n = 1; n < count; ++n) {
    if (!(out.values.back() > 0)) {
      throw NonpositiveRatio(n - 1);
    }
    T g = (T(1) - family.alpha_at<T>(n) / out.values.back()) / family.gamma_at<T>(n);
    guard(g, digit_cap);
    out.values.push_back(std::move(g));
  }
  if (!(out.values.back() > 0)) {
    throw NonpositiveRatio(count - 1);
  }
  return out;
}

RatioSequence<Number> ratios_at_one(const CoefficientFamily& family, std::size_t count,
                                    const ArithmeticOptions& options) {
  auto convert = [](const auto& seq) {
    RatioSequence<Number> out;
    out.exact = seq.exact;
    out.values.reserve(seq.values.size());
    for (const auto& v : seq.values) {
      out.values.push_back(Number::from(v));
    }
    return out;
  };
  const Arithmetic arithmetic = resolve_arithmetic(family, options);
  if (arithmetic == Arithmetic::Exact) {
    try {
      return convert(ratios_at_one<Rational>(family, count, options.digit_cap));
    } catch (const RationalBlowUp&) {
      return convert(ratios_at_one<long double>(family, count));
    }
  }
  return dispatch(arithmetic, [&](auto tag) {
    using T = typename decltype(tag)::type;
    return convert(ratios_at_one<T>(family, count, options.digit_cap));
  });
}

template <class T>
CoefficientFamily NormalizedFamily<T>::as_family() const {
  std::vector<Number> a;
  std::vector<Number> g;
  a.reserve(alpha_tilde.size());
  g.reserve(gamma_tilde.size());
  for (std::size_t n = 0; n < alpha_tilde.size(); ++n) {
    if constexpr (std::is_same_v<T, Number>) {
      a.push_back(alpha_tilde[n]);
      g.push_back(gamma_tilde[n]);
    } else {
      a.push_back(Number::from(alpha_tilde[n]));
      g.push_back(Number::from(gamma_tilde[n]));
    }
  }
  return CoefficientFamily::from_tables(base_name + "-normalized", a, g);
}

template <Scalar T>
NormalizedFamily<T> normalize(const CoefficientFamily& family, std::size_t N, std::size_t digit_cap) {
  const auto g = ratios_at_one<T>(family, N + 1, digit_cap);
  NormalizedFamily<T> out;
  out.base_name = family.name();
  out.exact = is_exact_v<T>;
  out.alpha_tilde.reserve(N + 1);
  out.gamma_tilde.reserve(N + 1);
  out.alpha_tilde.emplace_back(0);
  out.gamma_tilde.push_back(family.gamma_at<T>(0) * g.values[0]);
  for (std::size_t n = 1; n <= N; ++n) {
    out.alpha_tilde.push_back(family.alpha_at<T>(n) / g.values[n - 1]);
    out.gamma_tilde.push_back(family.gamma_at<T>(n) * g.values[n]);
  }
  return out;
}

NormalizedFamily<Number> normalize(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options) {
  auto convert = [](const auto& nf) {
    NormalizedFamily<Number> out;
    out.base_name = nf.base_name;
    out.exact = nf.exact;
    for (std::size_t n = 0; n < nf.size(); ++n) {
      out.alpha_tilde.push_back(Number::from(nf.alpha_tilde[n]));
      out.gamma_tilde.push_back(Number::from(nf.gamma_tilde[n]));
    }
    return out;
  };
  const Arithmetic arithmetic = resolve_arithmetic(family, options);
  if (arithmetic == Arithmetic::Exact) {
    try {
      return convert(normalize<Rational>(family, N, options.digit_cap));
    } catch (const RationalBlowUp&) {
      return convert(normalize<long double>(family, N));
    }
  }
  return dispatch(arithmetic, [&](auto tag) {
    using T = typename decltype(tag)::type;
    return convert(normalize<T>(family, N, options.digit_cap));
  });
}

CoefficientFamily associated_family(const CoefficientFamily& family, std::size_t k) {
  if (k == 0) {
    return family;
  }
  Params params = family.params();
  params["k"] = Number(static_cast<int>(k));
  const Sequence base_alpha = family.alpha();
  const std::optional<std::size_t> len =
      base_alpha.length() ? std::optional<std::size_t>(*base_alpha.length() > k ? *base_alpha.length() - k : 0)
                          : std::nullopt;
  Sequence alpha;
  if (base_alpha.is_exact()) {
    alpha =
        Sequence::exact([base_alpha, k](std::size_t n) { return n == 0 ? Rational(0) : base_alpha.exact_at(n + k); },
                        [base_alpha, k](std::size_t n) { return n == 0 ? 0.0L : base_alpha.real_at(n + k); }, len);
  } else {
    alpha = Sequence::real([base_alpha, k](std::size_t n) { return n == 0 ? 0.0L : base_alpha.real_at(n + k); }, len);
  }
  return CoefficientFamily(family.name() + "-assoc-" + std::to_string(k), std::move(params), std::move(alpha),
                           family.gamma().shifted(k));
}

template <Scalar T>
std::vector<T> scaled_polys(const CoefficientFamily& family, const Sequence& sigma, std::size_t n_max, const T& x,
                            std::size_t digit_cap) {
  std::vector<T> p = eval_polys<T>(family, n_max, x, digit_cap);
  for (std::size_t n = 0; n < p.size(); ++n) {
    p[n] *= sigma.at<T>(n);
  }
  return p;
}

std::vector<double> orthonormal_offdiag(const CoefficientFamily& family, std::size_t N) {
  std::vector<double> a;
  a.reserve(N);
  for (std::size_t n = 0; n < N; ++n) {
    a.push_back(static_cast<double>(std::sqrt(family.alpha_at<long double>(n + 1) * family.gamma_at<long double>(n))));
  }
  return a;
}

#define TURAN_INSTANTIATE_RECURRENCE(T)                                                                     \
  template std::vector<T> eval_polys<T>(const CoefficientFamily&, std::size_t, const T&, std::size_t);      \
  template RatioSequence<T> ratios_at_one<T>(const CoefficientFamily&, std::size_t, std::size_t);           \
  template NormalizedFamily<T> normalize<T>(const CoefficientFamily&, std::size_t, std::size_t);            \
  template std::vector<T> scaled_polys<T>(const CoefficientFamily&, const Sequence&, std::size_t, const T&, \
                                          std::size_t);                                                     \
  template struct NormalizedFamily<T>;
TURAN_INSTANTIATE_RECURRENCE(Rational)
TURAN_INSTANTIATE_RECURRENCE(double)
TURAN_INSTANTIATE_RECURRENCE(long double)
#undef TURAN_INSTANTIATE_RECURRENCE

template struct NormalizedFamily<Number>;

}  // namespace turan
