#ifndef TURAN_SEQUENCE_HPP
#define TURAN_SEQUENCE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "turan/errors.hpp"
#include "turan/number.hpp"

namespace turan {

/// An immutable real sequence indexed by n >= 0. Exact sequences produce
/// rationals and can also be read in floating point; real sequences can only
/// be read in floating point. Finite tables throw OutOfTable past their end.
class Sequence {
 public:
  using ExactFn = std::function<Rational(std::size_t)>;
  using RealFn = std::function<long double(std::size_t)>;

  Sequence();

  static Sequence exact(ExactFn fn, std::optional<std::size_t> length = std::nullopt);
  /// Exact sequence with a native floating evaluation; `approx` must agree with
  /// `fn` to extended precision.
  static Sequence exact(ExactFn fn, RealFn approx, std::optional<std::size_t> length = std::nullopt);
  static Sequence real(RealFn fn, std::optional<std::size_t> length = std::nullopt);
  static Sequence table(std::vector<Rational> values);
  static Sequence table(std::vector<long double> values);
  /// Exact table when every entry is exact, otherwise a floating table.
  static Sequence table(const std::vector<Number>& values);
  static Sequence constant(const Number& value);

  bool is_exact() const { return static_cast<bool>(exact_); }
  std::optional<std::size_t> length() const { return length_; }

  Rational exact_at(std::size_t n) const;
  long double real_at(std::size_t n) const;
  Number number_at(std::size_t n) const;

  template <Scalar T>
  T at(std::size_t n) const {
    if constexpr (is_exact_v<T>) {
      return exact_at(n);
    } else {
      return static_cast<T>(real_at(n));
    }
  }

  /// n -> this[n + k]; a finite table shrinks by k.
  Sequence shifted(std::size_t k) const;

 private:
  void check_index(std::size_t n) const;

  ExactFn exact_;
  RealFn real_;
  std::optional<std::size_t> length_;
};

}  // namespace turan

#endif  // TURAN_SEQUENCE_HPP
