#include "turan/number.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace turan {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  std::string text(s);
  if (text.front() == '+') {
    text.erase(0, 1);
  }
  return mpz_class(text, 10);
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') {
      exp_text.remove_prefix(1);
    }
    const auto* first = exp_text.data();
    const auto* last = first + exp_text.size();
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last || exp_text.empty()) {
      throw std::invalid_argument("bad exponent in '" + std::string(s) + "'");
    }
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw std::invalid_argument("not a decimal: '" + std::string(s) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    frac_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    }
    digits = std::string(s);
  }
  if (digits.empty()) {
    digits = "0";
  }
  mpz_class num(digits, 10);
  const long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

// Top 64 bits of |z| as a long double scaled back by the dropped exponent.
long double mpz_to_long_double(const mpz_class& z, long& exp2) {
  const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  mpz_class top = abs(z);
  exp2 = 0;
  if (bits > 64) {
    exp2 = static_cast<long>(bits - 64);
    mpz_fdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), static_cast<mp_bitcnt_t>(exp2));
  }
  // Assemble from two 32-bit halves; unsigned long may be 32 bits elsewhere.
  mpz_class hi = top >> 32;
  mpz_class lo = top - (hi << 32);
  const long double value = std::ldexp(static_cast<long double>(mpz_get_ui(hi.get_mpz_t())), 32) +
                            static_cast<long double>(mpz_get_ui(lo.get_mpz_t()));
  return sgn(z) < 0 ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw std::invalid_argument("empty number");
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash));
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::string format_rational(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::size_t digit_count(const Rational& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 10), mpz_sizeinbase(q.get_den_mpz_t(), 10));
}

long double to_long_double(const Rational& q) {
  if (q == 0) {
    return 0.0L;
  }
  long num_exp = 0;
  long den_exp = 0;
  const long double num = mpz_to_long_double(q.get_num(), num_exp);
  const long double den = mpz_to_long_double(q.get_den(), den_exp);
  return std::ldexp(num / den, static_cast<int>(num_exp - den_exp));
}

const Rational& Number::exact() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return *q;
  }
  throw std::logic_error("Number::exact() on a floating value");
}

long double Number::approx() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return to_long_double(*q);
  }
  return std::get<long double>(value_);
}

std::string Number::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return format_rational(*q);
  }
  std::ostringstream out;
  out.precision(std::numeric_limits<long double>::max_digits10);
  out << std::get<long double>(value_);
  return out.str();
}

bool operator==(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) {
    return a.exact() == b.exact();
  }
  return a.approx() == b.approx();
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less:
      return "<";
    case Relation::LessEqual:
      return "<=";
    case Relation::Equal:
      return "==";
  }
  return "?";
}

bool compare(const Number& lhs, const Number& rhs, Relation rel, double margin) {
  auto apply = [&](const auto& a, const auto& b) {
    switch (rel) {
      case Relation::Less:
        return less_strict(a, b, margin);
      case Relation::LessEqual:
        return less_equal(a, b, margin);
      case Relation::Equal:
        return equal_within(a, b, margin);
    }
    return false;
  };
  if (lhs.is_exact() && rhs.is_exact()) {
    return apply(lhs.exact(), rhs.exact());
  }
  return apply(lhs.approx(), rhs.approx());
}

}  // namespace turan
