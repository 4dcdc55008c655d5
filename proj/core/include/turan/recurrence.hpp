#ifndef TURAN_RECURRENCE_HPP
#define TURAN_RECURRENCE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "turan/errors.hpp"
#include "turan/number.hpp"
#include "turan/sequence.hpp"

namespace turan {

inline constexpr std::size_t kDefaultDigitCap = 4096;

using Params = std::map<std::string, Number>;

/// Coefficients (alpha_n, gamma_n) of the symmetric recurrence
///
///   x p_n = gamma_n p_{n+1} + alpha_n p_{n-1},   p_{-1} = 0, p_0 = 1,
///
/// with alpha_0 = 0, alpha_n > 0 for n >= 1 and gamma_n > 0. Construction checks
/// the leading terms; finite tables are checked entry by entry.
class CoefficientFamily {
 public:
  CoefficientFamily(std::string name, Params params, Sequence alpha, Sequence gamma);

  /// Finite coefficient tables. Both tables must have the same length.
  static CoefficientFamily from_tables(std::string name, const std::vector<Number>& alpha,
                                       const std::vector<Number>& gamma);

  const std::string& name() const { return name_; }
  const Params& params() const { return params_; }
  const Sequence& alpha() const { return alpha_; }
  const Sequence& gamma() const { return gamma_; }

  /// True when every coefficient is rational.
  bool exact() const { return alpha_.is_exact() && gamma_.is_exact(); }

  /// Number of available indices for table families.
  std::optional<std::size_t> size() const;

  template <Scalar T>
  T alpha_at(std::size_t n) const {
    return alpha_.at<T>(n);
  }
  template <Scalar T>
  T gamma_at(std::size_t n) const {
    return gamma_.at<T>(n);
  }

 private:
  std::string name_;
  Params params_;
  Sequence alpha_;
  Sequence gamma_;
};

enum class ArithmeticMode { Auto, Rational, Float };
enum class FloatPrecision { Double, Extended };
enum class Arithmetic { Exact, Double, Extended };

struct ArithmeticOptions {
  ArithmeticMode mode = ArithmeticMode::Auto;
  FloatPrecision precision = FloatPrecision::Double;
  std::size_t digit_cap = kDefaultDigitCap;
  /// Relative margin for floating comparisons.
  double margin = 1e-14;
};

/// Arithmetic a computation on `family` runs in. Rational mode on an inexact
/// family throws ParamError.
Arithmetic resolve_arithmetic(const CoefficientFamily& family, const ArithmeticOptions& options);

const char* to_string(Arithmetic a);

/// Calls `f(std::type_identity<T>{})` with the scalar type matching `a`.
template <class F>
decltype(auto) dispatch(Arithmetic a, F&& f) {
  switch (a) {
    case Arithmetic::Exact:
      return std::forward<F>(f)(std::type_identity<Rational>{});
    case Arithmetic::Double:
      return std::forward<F>(f)(std::type_identity<double>{});
    case Arithmetic::Extended:
      break;
  }
  return std::forward<F>(f)(std::type_identity<long double>{});
}

/// Throws RationalBlowUp when `q` has more than `cap` digits.
void guard_digits(const Rational& q, std::size_t cap);

/// p_0(x) .. p_{n_max}(x) by forward recurrence.
template <Scalar T>
std::vector<T> eval_polys(const CoefficientFamily& family, std::size_t n_max, const T& x,
                          std::size_t digit_cap = kDefaultDigitCap);

/// g_n = p_{n+1}(1) / p_n(1).
template <class T>
struct RatioSequence {
  std::vector<T> values;
  bool exact = false;
};

/// g_0 .. g_{count-1} from g_0 = 1/gamma_0, g_n = (1 - alpha_n/g_{n-1}) / gamma_n.
/// Throws NonpositiveRatio at the first g_n <= 0.
template <Scalar T>
RatioSequence<T> ratios_at_one(const CoefficientFamily& family, std::size_t count,
                               std::size_t digit_cap = kDefaultDigitCap);

/// Mode-resolving variant. An exact run that exceeds the digit cap is redone in
/// extended precision and reported inexact.
RatioSequence<Number> ratios_at_one(const CoefficientFamily& family, std::size_t count,
                                    const ArithmeticOptions& options = {});

/// Coefficients of P_n = p_n / p_n(1), which satisfy alpha~_n + gamma~_n = 1.
template <class T>
struct NormalizedFamily {
  std::string base_name;
  std::vector<T> alpha_tilde;  // indices 0..N
  std::vector<T> gamma_tilde;  // indices 0..N
  bool exact = false;

  std::size_t size() const { return alpha_tilde.size(); }
  /// The normalized coefficients as a finite table family.
  CoefficientFamily as_family() const;
};

/// alpha~_n = alpha_n / g_{n-1}, gamma~_n = gamma_n g_n for 0 <= n <= N.
template <Scalar T>
NormalizedFamily<T> normalize(const CoefficientFamily& family, std::size_t N, std::size_t digit_cap = kDefaultDigitCap);

NormalizedFamily<Number> normalize(const CoefficientFamily& family, std::size_t N,
                                   const ArithmeticOptions& options = {});

/// Associated family of order k: gamma'_0 = gamma_k, alpha'_n = alpha_{n+k},
/// gamma'_n = gamma_{n+k}. Order 0 returns a copy.
CoefficientFamily associated_family(const CoefficientFamily& family, std::size_t k);

/// sigma_n p_n(x) for 0 <= n <= n_max.
template <Scalar T>
std::vector<T> scaled_polys(const CoefficientFamily& family, const Sequence& sigma, std::size_t n_max, const T& x,
                            std::size_t digit_cap = kDefaultDigitCap);

/// Off-diagonals a_1..a_N of the orthonormal (Jacobi) form,
/// a_{n+1} = sqrt(alpha_{n+1} gamma_n).
std::vector<double> orthonormal_offdiag(const CoefficientFamily& family, std::size_t N);

#define TURAN_EXTERN_RECURRENCE(T)                                                                                 \
  extern template std::vector<T> eval_polys<T>(const CoefficientFamily&, std::size_t, const T&, std::size_t);      \
  extern template RatioSequence<T> ratios_at_one<T>(const CoefficientFamily&, std::size_t, std::size_t);           \
  extern template NormalizedFamily<T> normalize<T>(const CoefficientFamily&, std::size_t, std::size_t);            \
  extern template std::vector<T> scaled_polys<T>(const CoefficientFamily&, const Sequence&, std::size_t, const T&, \
                                                 std::size_t);
TURAN_EXTERN_RECURRENCE(Rational)
TURAN_EXTERN_RECURRENCE(double)
TURAN_EXTERN_RECURRENCE(long double)
#undef TURAN_EXTERN_RECURRENCE

}  // namespace turan

#endif  // TURAN_RECURRENCE_HPP
