#include "turan/sequence.hpp"

#include <utility>

namespace turan {

Sequence::Sequence() : exact_([](std::size_t) { return Rational(0); }), real_([](std::size_t) { return 0.0L; }) {}

Sequence Sequence::exact(ExactFn fn, std::optional<std::size_t> length) {
  Sequence s;
  s.real_ = [fn](std::size_t n) { return to_long_double(fn(n)); };
  s.exact_ = std::move(fn);
  s.length_ = length;
  return s;
}

Sequence Sequence::exact(ExactFn fn, RealFn approx, std::optional<std::size_t> length) {
  Sequence s;
  s.exact_ = std::move(fn);
  s.real_ = std::move(approx);
  s.length_ = length;
  return s;
}

Sequence Sequence::real(RealFn fn, std::optional<std::size_t> length) {
  Sequence s;
  s.exact_ = nullptr;
  s.real_ = std::move(fn);
  s.length_ = length;
  return s;
}

Sequence Sequence::table(std::vector<Rational> values) {
  auto approx = std::make_shared<std::vector<long double>>();
  approx->reserve(values.size());
  for (auto& v : values) {
    v.canonicalize();
    approx->push_back(to_long_double(v));
  }
  auto shared = std::make_shared<const std::vector<Rational>>(std::move(values));
  return exact([shared](std::size_t n) { return (*shared)[n]; }, [approx](std::size_t n) { return (*approx)[n]; },
               shared->size());
}

Sequence Sequence::table(std::vector<long double> values) {
  auto shared = std::make_shared<const std::vector<long double>>(std::move(values));
  return real([shared](std::size_t n) { return (*shared)[n]; }, shared->size());
}

Sequence Sequence::table(const std::vector<Number>& values) {
  bool all_exact = true;
  for (const auto& v : values) {
    all_exact = all_exact && v.is_exact();
  }
  if (all_exact) {
    std::vector<Rational> q;
    q.reserve(values.size());
    for (const auto& v : values) {
      q.push_back(v.exact());
    }
    return table(std::move(q));
  }
  std::vector<long double> r;
  r.reserve(values.size());
  for (const auto& v : values) {
    r.push_back(v.approx());
  }
  return table(std::move(r));
}

Sequence Sequence::constant(const Number& value) {
  if (value.is_exact()) {
    return exact([q = value.exact()](std::size_t) { return q; });
  }
  return real([x = value.approx()](std::size_t) { return x; });
}

void Sequence::check_index(std::size_t n) const {
  if (length_ && n >= *length_) {
    throw OutOfTable(n, *length_);
  }
}

Rational Sequence::exact_at(std::size_t n) const {
  if (!exact_) {
    throw std::logic_error("exact value requested from a floating-point sequence");
  }
  check_index(n);
  return canonical(exact_(n));
}

long double Sequence::real_at(std::size_t n) const {
  check_index(n);
  return real_(n);
}

Number Sequence::number_at(std::size_t n) const {
  if (is_exact()) {
    return Number(exact_at(n));
  }
  return Number(real_at(n));
}

Sequence Sequence::shifted(std::size_t k) const {
  std::optional<std::size_t> len;
  if (length_) {
    len = *length_ > k ? *length_ - k : 0;
  }
  if (is_exact()) {
    return exact([base = *this, k](std::size_t n) { return base.exact_at(n + k); },
                 [base = *this, k](std::size_t n) { return base.real_at(n + k); }, len);
  }
  return real([base = *this, k](std::size_t n) { return base.real_at(n + k); }, len);
}

}  // namespace turan
