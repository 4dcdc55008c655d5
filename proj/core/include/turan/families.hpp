#ifndef TURAN_FAMILIES_HPP
#define TURAN_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turan/criteria.hpp"
#include "turan/recurrence.hpp"

namespace turan {

enum class FamilyKind {
  ChebyshevT,
  ChebyshevU,
  Legendre,
  Gegenbauer,
  Pollaczek,
  Example2,
  Example3,
  Example4,
  Corollary1,
  Corollary2,
  Table,
};

const char* to_string(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_string(std::string_view name);

/// Everything needed to rebuild a family. `alpha`/`gamma` are used by Table;
/// `epsilon`/`delta` optionally replace the Example2 presets.
struct FamilySpec {
  FamilyKind kind = FamilyKind::ChebyshevT;
  Params params;
  std::vector<Number> alpha;
  std::vector<Number> gamma;
  std::vector<Number> epsilon;
  std::vector<Number> delta;
};

struct FamilyKindInfo {
  FamilyKind kind;
  std::string parameters;
  std::string constraints;
  std::string coefficients;
};

/// Catalogue backing `families list`.
const std::vector<FamilyKindInfo>& family_kinds();

/// Builds the family; throws ParamError naming the violated constraint.
///
///   ChebyshevT            gamma_0 = 1, alpha_n = gamma_n = 1/2 (n >= 1)
///   ChebyshevU            alpha_n = n/(2(n+1)), gamma_n = (n+2)/(2(n+1))
///   Legendre              alpha_n = n/(2n+1), gamma_n = (n+1)/(2n+1)
///   Gegenbauer(lambda)    alpha_n = n/(2(n+lambda)), gamma_n = (n+2 lambda)/(2(n+lambda))
///   Pollaczek(lambda, a)  alpha_n = n/(2(n+lambda+a)), gamma_n = (n+2 lambda)/(2(n+lambda+a))
///   Example2              alpha_n = 1/2 - 3 eps_n (1 + delta_n), gamma_n = 1/2 + eps_n
///   Example3(a)           alpha_n = 1/2 - a/(2(n+a)), gamma_n = 1/2 + a/(2(n+a+1))
///   Example4(a, b)        as Example3 with gamma_n = 1/2 + a/(2(n+a+b+1))
///   Corollary1(alpha, gamma)          delta_n = 1/(2 alpha (n+1))
///   Corollary2(alpha, gamma, delta0)  delta_n = delta0/(n+1), alpha_0 = 0
///
/// Example2 presets: eps_n = eps0 ratio^n and delta_n = c/(n+1), where
/// c = 1/(6 eps0) - 1 enforces eps_0 (1 + delta_0) = 1/6.
CoefficientFamily build(const FamilySpec& spec);

/// Convenience for the closed-form kinds.
CoefficientFamily build(FamilyKind kind, Params params = {});

/// Corollary parametrization that a built family is known to follow, if any.
struct ShapeHint {
  Criterion criterion;
  CorollaryShape shape;
};
std::optional<ShapeHint> corollary_shape(const CoefficientFamily& family);

struct Classification {
  std::vector<CriterionReport> reports;
  std::vector<Criterion> certified;
  /// Criteria known to apply that this library does not check.
  std::vector<std::string> unchecked;
};

/// Runs every applicable checker up to N.
Classification run_criteria(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options = {});

/// Names of the criteria that return Satisfied.
std::vector<Criterion> classify(const CoefficientFamily& family, std::size_t N, const ArithmeticOptions& options = {});

}  // namespace turan

#endif  // TURAN_FAMILIES_HPP
