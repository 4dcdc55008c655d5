#include "turan/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace turan {

namespace {

template <Scalar T>
struct Coefficients {
  std::vector<T> alpha;
  std::vector<T> gamma;
};

/// Coefficients for indices 0..count-1. Normalized coefficients of an exact
/// family are computed in rationals and rounded once.
template <Scalar T>
Coefficients<T> prepare(const CoefficientFamily& family, std::size_t count, bool normalized, std::size_t digit_cap) {
  Coefficients<T> c;
  c.alpha.reserve(count);
  c.gamma.reserve(count);
  if (!normalized) {
    for (std::size_t n = 0; n < count; ++n) {
      c.alpha.push_back(family.alpha_at<T>(n));
      c.gamma.push_back(family.gamma_at<T>(n));
    }
    return c;
  }
  if constexpr (is_exact_v<T>) {
    const auto nf = normalize<Rational>(family, count - 1, digit_cap);
    c.alpha = nf.alpha_tilde;
    c.gamma = nf.gamma_tilde;
  } else {
    if (family.exact()) {
      try {
        const auto nf = normalize<Rational>(family, count - 1, digit_cap);
        for (std::size_t n = 0; n < nf.size(); ++n) {
          c.alpha.push_back(from_rational<T>(nf.alpha_tilde[n]));
          c.gamma.push_back(from_rational<T>(nf.gamma_tilde[n]));
        }
        return c;
      } catch (const RationalBlowUp&) {
        c.alpha.clear();
        c.gamma.clear();
      }
    }
    const auto nf = normalize<long double>(family, count - 1);
    for (std::size_t n = 0; n < nf.size(); ++n) {
      c.alpha.push_back(static_cast<T>(nf.alpha_tilde[n]));
      c.gamma.push_back(static_cast<T>(nf.gamma_tilde[n]));
    }
  }
  return c;
}

/// Delta_1 .. Delta_{n_max} at x from one forward pass.
template <Scalar T>
void turan_row(const Coefficients<T>& c, std::size_t n_max, const T& x, std::vector<T>& out) {
  out.resize(n_max + 1);
  T prev(1);
  T curr = x / c.gamma[0];
  for (std::size_t n = 1; n <= n_max; ++n) {
    T next = (x * curr - c.alpha[n] * prev) / c.gamma[n];
    out[n] = curr * curr - prev * next;
    prev = std::move(curr);
    curr = std::move(next);
  }
}

struct RowTracker {
  double min_value = std::numeric_limits<double>::infinity();
  double argmin_x = 0.0;
  double max_abs = 0.0;
  bool confirmed = false;

  void add(double value, double x, bool from_extended) {
    if (value < min_value) {
      min_value = value;
      argmin_x = x;
      confirmed = from_extended;
    }
    max_abs = std::max(max_abs, std::fabs(value));
  }
};

void finish_rows(TuranReport& report, const std::vector<RowTracker>& rows, double tolerance) {
  for (std::size_t n = report.n_first; n <= report.n_last; ++n) {
    const RowTracker& r = rows[n];
    TuranRow row;
    row.n = n;
    row.min_value = r.min_value;
    row.argmin_x = r.argmin_x;
    row.scale = std::max(1.0, r.max_abs);
    row.nonnegative = r.min_value >= -tolerance * row.scale;
    row.confirmed = r.confirmed;
    report.per_n.push_back(row);
  }
}

}  // namespace

bool TuranReport::all_nonnegative() const {
  return std::all_of(per_n.begin(), per_n.end(), [](const TuranRow& r) { return r.nonnegative; });
}

std::vector<double> scan_grid(std::size_t points) {
  if (points < 3) {
    throw std::invalid_argument("scan grid needs at least 3 points");
  }
  std::vector<double> xs;
  xs.reserve(2 * points);
  const auto m = static_cast<long long>(points) - 1;
  for (long long i = 0; i <= m; ++i) {
    xs.push_back(static_cast<double>(2 * i - m) / static_cast<double>(m));
  }
  // Chebyshev-Lobatto nodes cos(k pi / m), generated for x >= 0 and mirrored.
  for (long long k = 0; 2 * k <= m; ++k) {
    const double node = std::sin(std::numbers::pi * static_cast<double>(m - 2 * k) / (2.0 * static_cast<double>(m)));
    xs.push_back(node);
    xs.push_back(-node);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (double& x : xs) {
    if (x == 0.0) {
      x = 0.0;  // drop -0.0
    }
  }
  return xs;
}

template <Scalar T>
T turan_det(const CoefficientFamily& family, std::size_t n, const T& x, bool normalized, std::size_t digit_cap) {
  if (n < 1) {
    throw std::invalid_argument("turan_det needs n >= 1");
  }
  const auto c = prepare<T>(family, n + 1, normalized, digit_cap);
  std::vector<T> row;
  turan_row(c, n, x, row);
  return row[n];
}

TuranReport grid_scan(const CoefficientFamily& family, std::size_t n_max, std::size_t grid_points, bool normalized,
                      const ScanOptions& options) {
  if (n_max < 1) {
    throw std::invalid_argument("grid_scan needs n_max >= 1");
  }
  const auto xs = scan_grid(grid_points);
  const std::size_t cap = options.arithmetic.digit_cap;
  const auto coeffs = prepare<double>(family, n_max + 1, normalized, cap);

  std::vector<std::vector<double>> values(xs.size());
  std::vector<double> scale(n_max + 1, 1.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    turan_row(coeffs, n_max, xs[i], values[i]);
    for (std::size_t n = 1; n <= n_max; ++n) {
      scale[n] = std::max(scale[n], std::fabs(values[i][n]));
    }
  }

  std::optional<Coefficients<long double>> extended;
  std::vector<long double> row_ext;
  std::vector<RowTracker> rows(n_max + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool recomputed = false;
    for (std::size_t n = 1; n <= n_max; ++n) {
      double v = values[i][n];
      bool from_extended = false;
      if (std::fabs(v) < options.confirm_threshold * scale[n]) {
        if (!extended) {
          extended = prepare<long double>(family, n_max + 1, normalized, cap);
        }
        if (!recomputed) {
          turan_row(*extended, n_max, static_cast<long double>(xs[i]), row_ext);
          recomputed = true;
        }
        v = static_cast<double>(row_ext[n]);
        from_extended = true;
      }
      rows[n].add(v, xs[i], from_extended);
    }
  }

  TuranReport report;
  report.n_first = 1;
  report.n_last = n_max;
  report.grid_kind = "uniform+chebyshev";
  report.grid_points = xs.size();
  report.tolerance = options.tolerance;
  report.normalized = normalized;
  finish_rows(report, rows, options.tolerance);
  return report;
}

std::optional<std::size_t> log_concavity_violation(const Sequence& sigma, std::size_t n_max) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    bool ok = false;
    if (sigma.is_exact()) {
      const Rational s = sigma.exact_at(n);
      ok = s * s >= sigma.exact_at(n - 1) * sigma.exact_at(n + 1);
    } else {
      const long double s = sigma.real_at(n);
      ok = s * s >= sigma.real_at(n - 1) * sigma.real_at(n + 1);
    }
    if (!ok) {
      return n;
    }
  }
  return std::nullopt;
}

TuranReport scaled_scan(const CoefficientFamily& family, const Sequence& sigma, std::size_t n_max,
                        std::size_t grid_points, const ScanOptions& options) {
  if (n_max < 1) {
    throw std::invalid_argument("scaled_scan needs n_max >= 1");
  }
  const auto xs = scan_grid(grid_points);
  const auto coeffs = prepare<long double>(family, n_max + 1, true, options.arithmetic.digit_cap);
  std::vector<long double> s(n_max + 2);
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    s[n] = sigma.real_at(n);
    if (!(s[n] > 0)) {
      throw ParamError("scaling sequence must be positive (n = " + std::to_string(n) + ")");
    }
  }

  std::vector<RowTracker> rows(n_max + 1);
  std::vector<long double> p(n_max + 2);
  for (const double xd : xs) {
    const long double x = xd;
    p[0] = 1.0L;
    p[1] = x / coeffs.gamma[0];
    for (std::size_t n = 1; n <= n_max; ++n) {
      p[n + 1] = (x * p[n] - coeffs.alpha[n] * p[n - 1]) / coeffs.gamma[n];
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      const long double value = s[n] * s[n] * p[n] * p[n] - s[n - 1] * s[n + 1] * p[n - 1] * p[n + 1];
      rows[n].add(static_cast<double>(value), xd, true);
    }
  }

  TuranReport report;
  report.n_first = 1;
  report.n_last = n_max;
  report.grid_kind = "uniform+chebyshev";
  report.grid_points = xs.size();
  report.tolerance = options.tolerance;
  report.normalized = true;
  finish_rows(report, rows, options.tolerance);
  const auto violation = log_concavity_violation(sigma, n_max);
  report.sigma_log_concave = !violation.has_value();
  report.sigma_first_violation = violation;
  return report;
}

template Rational turan_det<Rational>(const CoefficientFamily&, std::size_t, const Rational&, bool, std::size_t);
template double turan_det<double>(const CoefficientFamily&, std::size_t, const double&, bool, std::size_t);
template long double turan_det<long double>(const CoefficientFamily&, std::size_t, const long double&, bool,
                                            std::size_t);

}  // namespace turan
