#ifndef TURAN_NUMBER_HPP
#define TURAN_NUMBER_HPP

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

namespace turan {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal such as "-0.125" or "2.5e-3"
/// into an exact rational. Throws std::invalid_argument on malformed input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den" with den > 0; integers are written with den 1.
std::string format_rational(const Rational& q);

/// Number of decimal digits in the larger of numerator and denominator.
std::size_t digit_count(const Rational& q);

/// Rational -> long double, correct to about 63 bits even when numerator and
/// denominator individually overflow the floating range.
long double to_long_double(const Rational& q);

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double> || std::same_as<T, long double>;

template <Scalar T>
T from_rational(const Rational& q) {
  if constexpr (is_exact_v<T>) {
    return q;
  } else {
    return static_cast<T>(to_long_double(q));
  }
}

template <Scalar T>
long double to_long_double(const T& v) {
  if constexpr (is_exact_v<T>) {
    return to_long_double(static_cast<const Rational&>(v));
  } else {
    return static_cast<long double>(v);
  }
}

template <Scalar T>
T abs_value(const T& v) {
  if constexpr (is_exact_v<T>) {
    return abs(v);
  } else {
    return std::fabs(v);
  }
}

/// Comparison semantics used by every checker. Exact scalars compare exactly;
/// floating scalars apply a relative margin so that strict comparisons are not
/// decided by rounding and boundary-tight equalities are not rejected by it.
template <Scalar T>
bool less_strict(const T& a, const T& b, double margin) {
  if constexpr (is_exact_v<T>) {
    return a < b;
  } else {
    const T scale = std::fmax(std::fabs(a), std::fabs(b));
    return a < b - static_cast<T>(margin) * scale;
  }
}

template <Scalar T>
bool less_equal(const T& a, const T& b, double margin) {
  if constexpr (is_exact_v<T>) {
    return a <= b;
  } else {
    const T scale = std::fmax(std::fabs(a), std::fabs(b));
    return a <= b + static_cast<T>(margin) * scale;
  }
}

template <Scalar T>
bool equal_within(const T& a, const T& b, double margin) {
  return less_equal(a, b, margin) && less_equal(b, a, margin);
}

/// gmpxx leaves Rational(num, den) unreduced, and comparisons assume reduced form.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

/// A value produced in whichever arithmetic mode a computation ran in.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(Rational q) : value_(canonical(std::move(q))) {}    // NOLINT(google-explicit-constructor)
  Number(long double x) : value_(x) {}                       // NOLINT(google-explicit-constructor)
  Number(double x) : value_(static_cast<long double>(x)) {}  // NOLINT(google-explicit-constructor)
  Number(int x) : value_(Rational(x)) {}                     // NOLINT(google-explicit-constructor)

  template <Scalar T>
  static Number from(const T& v) {
    if constexpr (is_exact_v<T>) {
      return Number(Rational(v));
    } else {
      return Number(static_cast<long double>(v));
    }
  }

  /// Parses rational notation exactly; anything parse_rational rejects throws.
  static Number parse(std::string_view text) { return Number(parse_rational(text)); }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;
  long double approx() const;
  double to_double() const { return static_cast<double>(approx()); }

  /// Exact values as "num/den"; floating values with round-trip precision.
  std::string to_string() const;

  template <Scalar T>
  T as() const {
    if constexpr (is_exact_v<T>) {
      return exact();
    } else {
      return static_cast<T>(approx());
    }
  }

  friend bool operator==(const Number& a, const Number& b);

 private:
  std::variant<Rational, long double> value_;
};

enum class Relation { Less, LessEqual, Equal };

const char* to_string(Relation r);

/// Evaluates lhs `rel` rhs with the exact/margin semantics above. Mixed
/// exactness compares in long double.
bool compare(const Number& lhs, const Number& rhs, Relation rel, double margin);

}  // namespace turan

#endif  // TURAN_NUMBER_HPP
