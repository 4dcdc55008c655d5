#ifndef TURAN_SCAN_HPP
#define TURAN_SCAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "turan/recurrence.hpp"
#include "turan/sequence.hpp"

namespace turan {

struct ScanOptions {
  /// Row n is nonnegative when min >= -tolerance * max(1, max |Delta_n|).
  double tolerance = 1e-12;
  /// Values below this fraction of the row scale are recomputed in extended precision.
  double confirm_threshold = 1e-10;
  ArithmeticOptions arithmetic;
};

struct TuranRow {
  std::size_t n = 0;
  double min_value = 0.0;
  double argmin_x = 0.0;
  bool nonnegative = true;
  double scale = 1.0;
  /// The minimum was confirmed in extended precision.
  bool confirmed = false;
};

struct TuranReport {
  std::size_t n_first = 1;
  std::size_t n_last = 1;
  std::string grid_kind;
  std::size_t grid_points = 0;
  double tolerance = 0.0;
  bool normalized = true;
  std::vector<TuranRow> per_n;
  /// Set by scaled_scan: sigma_n^2 >= sigma_{n-1} sigma_{n+1} for 1 <= n <= n_max.
  std::optional<bool> sigma_log_concave;
  std::optional<std::size_t> sigma_first_violation;

  bool all_nonnegative() const;
};

/// Sorted union of `points` uniform nodes and `points` Chebyshev-Lobatto nodes on
/// [-1, 1]; both include the endpoints and are exactly symmetric about 0.
std::vector<double> scan_grid(std::size_t points);

/// P_n^2 - P_{n-1} P_{n+1} (normalized at 1) or p_n^2 - p_{n-1} p_{n+1} (raw).
/// Floating instantiations use the same coefficients and recurrence as grid_scan.
template <Scalar T>
T turan_det(const CoefficientFamily& family, std::size_t n, const T& x, bool normalized,
            std::size_t digit_cap = kDefaultDigitCap);

/// Delta_n over scan_grid(grid_points) for 1 <= n <= n_max, evaluated in double
/// with extended-precision confirmation of near-zero values.
TuranReport grid_scan(const CoefficientFamily& family, std::size_t n_max, std::size_t grid_points, bool normalized,
                      const ScanOptions& options = {});

/// (sigma_n P_n)^2 - sigma_{n-1} sigma_{n+1} P_{n-1} P_{n+1} in extended precision,
/// plus the log-concavity flag of sigma.
TuranReport scaled_scan(const CoefficientFamily& family, const Sequence& sigma, std::size_t n_max,
                        std::size_t grid_points, const ScanOptions& options = {});

/// sigma_n^2 >= sigma_{n-1} sigma_{n+1} for 1 <= n <= n_max; returns the first failing n.
std::optional<std::size_t> log_concavity_violation(const Sequence& sigma, std::size_t n_max);

extern template Rational turan_det<Rational>(const CoefficientFamily&, std::size_t, const Rational&, bool, std::size_t);
extern template double turan_det<double>(const CoefficientFamily&, std::size_t, const double&, bool, std::size_t);
extern template long double turan_det<long double>(const CoefficientFamily&, std::size_t, const long double&, bool,
                                                   std::size_t);

}  // namespace turan

#endif  // TURAN_SCAN_HPP
