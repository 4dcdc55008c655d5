#ifndef TURAN_DENSITY_HPP
#define TURAN_DENSITY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "turan/recurrence.hpp"

namespace turan {

/// p_n^2 - p_{n-1} p_{n+1} for the orthonormal recurrence
/// x p_n = a_{n+1} p_{n+1} + a_n p_{n-1}, p_0 = 1, p_1 = x / a_1.
/// `a` holds a_1, a_2, ... and needs at least n + 1 entries. Runs in extended
/// precision.
double orthonormal_turan(std::span<const double> a, std::size_t n, double x);

struct DensityOptions {
  /// Off-diagonals must satisfy |a_N - 1/2| < this for the limit to be trusted.
  double offdiag_limit_tolerance = 0.01;
  /// Cap on sum |a_{n+1} - a_n| before bounded variation is reported as doubtful.
  double variation_cap = 10.0;
};

struct DensityEstimate {
  std::size_t N = 0;
  std::vector<double> xs;
  /// Delta_N(x), the approximation of f(x).
  std::vector<double> f_values;
  /// 2 sqrt(1 - x^2) / (pi f_N(x)); zero where invalid.
  std::vector<double> density;
  /// |Delta_N - Delta_{N-1}| per x.
  std::vector<double> last_change;
  /// |Delta_N - Delta_{N/2}| per x.
  std::vector<double> doubling_change;
  /// f_N(x) > 0.
  std::vector<bool> valid;

  double final_offdiag = 0.0;
  bool offdiag_converged = false;
  /// sum_{n<N} |a_{n+1} - a_n|; finite data cannot certify bounded variation.
  double variation_partial_sum = 0.0;
  bool variation_within_cap = false;
  std::vector<std::string> warnings;

  bool all_valid() const;
};

/// `points` uniform nodes on [-bound, bound]. Throws std::invalid_argument
/// unless bound < 1 - 1e-3, since the density formula degenerates at +-1.
std::vector<double> density_grid(std::size_t points = 199, double bound = 0.99);

/// Turan-limit density reconstruction at degree N (N >= 10).
DensityEstimate estimate_density(const CoefficientFamily& family, std::size_t N, std::span<const double> xs,
                                 const DensityOptions& options = {});

/// The density value for a given limit f: 2 sqrt(1 - x^2) / (pi f).
double density_from_limit(double x, double f);

}  // namespace turan

#endif  // TURAN_DENSITY_HPP
