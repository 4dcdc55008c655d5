#include "turan/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace turan {

namespace {

/// Walks the orthonormal recurrence to degree n + 1, recording Delta at the
/// requested degrees (ascending, each <= n).
void orthonormal_deltas(std::span<const double> a, std::size_t n, double xd, std::span<const std::size_t> degrees,
                        std::span<double> out) {
  if (a.size() < n + 1) {
    throw std::invalid_argument("orthonormal recurrence needs a_1..a_" + std::to_string(n + 1));
  }
  const long double x = xd;
  long double prev = 1.0L;
  long double curr = x / static_cast<long double>(a[0]);
  std::size_t next_degree = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    // a[k] is a_{k+1}; a[k-1] is a_k.
    const long double next = (x * curr - static_cast<long double>(a[k - 1]) * prev) / static_cast<long double>(a[k]);
    while (next_degree < degrees.size() && degrees[next_degree] == k) {
      out[next_degree] = static_cast<double>(curr * curr - prev * next);
      ++next_degree;
    }
    prev = curr;
    curr = next;
  }
}

}  // namespace

double orthonormal_turan(std::span<const double> a, std::size_t n, double x) {
  if (n < 1) {
    throw std::invalid_argument("orthonormal_turan needs n >= 1");
  }
  const std::size_t degree[] = {n};
  double value = 0.0;
  orthonormal_deltas(a, n, x, degree, std::span<double>(&value, 1));
  return value;
}

double density_from_limit(double x, double f) { return 2.0 * std::sqrt(1.0 - x * x) / (std::numbers::pi * f); }

bool DensityEstimate::all_valid() const {
  return std::all_of(valid.begin(), valid.end(), [](bool v) { return v; });
}

std::vector<double> density_grid(std::size_t points, double bound) {
  if (points < 1) {
    throw std::invalid_argument("density grid needs at least one point");
  }
  if (!(bound >= 0.0) || bound >= 1.0 - 1e-3) {
    throw std::invalid_argument("density grid bound must lie in [0, 1 - 1e-3)");
  }
  std::vector<double> xs;
  xs.reserve(points);
  if (points == 1) {
    xs.push_back(0.0);
    return xs;
  }
  const auto m = static_cast<long long>(points) - 1;
  for (long long i = 0; i <= m; ++i) {
    xs.push_back(bound * static_cast<double>(2 * i - m) / static_cast<double>(m));
  }
  return xs;
}

DensityEstimate estimate_density(const CoefficientFamily& family, std::size_t N, std::span<const double> xs,
                                 const DensityOptions& options) {
  if (N < 10) {
    throw ParamError("estimate_density needs N >= 10");
  }
  for (const double x : xs) {
    if (!(std::fabs(x) < 1.0)) {
      throw std::invalid_argument("density evaluation points must lie in (-1, 1)");
    }
  }
  const std::vector<double> a = orthonormal_offdiag(family, N + 1);

  DensityEstimate est;
  est.N = N;
  est.xs.assign(xs.begin(), xs.end());
  est.final_offdiag = a[N - 1];
  est.offdiag_converged = std::fabs(a[N - 1] - 0.5) < options.offdiag_limit_tolerance;
  if (!est.offdiag_converged) {
    std::ostringstream msg;
    msg << "a_N = " << a[N - 1] << " is not within " << options.offdiag_limit_tolerance
        << " of 1/2; the Turan limit may not describe the density";
    est.warnings.push_back(msg.str());
  }
  for (std::size_t k = 0; k + 1 < N; ++k) {
    est.variation_partial_sum += std::fabs(a[k + 1] - a[k]);
  }
  est.variation_within_cap = est.variation_partial_sum < options.variation_cap;
  est.warnings.emplace_back("bounded variation of a_n is assessed from a finite partial sum and is not certified");

  const std::size_t degrees[] = {N / 2, N - 1, N};
  double deltas[3] = {};
  for (const double x : xs) {
    orthonormal_deltas(a, N, x, degrees, deltas);
    const double f = deltas[2];
    est.f_values.push_back(f);
    est.last_change.push_back(std::fabs(deltas[2] - deltas[1]));
    est.doubling_change.push_back(std::fabs(deltas[2] - deltas[0]));
    const bool ok = f > 0.0;
    est.valid.push_back(ok);
    est.density.push_back(ok ? density_from_limit(x, f) : 0.0);
  }
  return est;
}

}  // namespace turan
