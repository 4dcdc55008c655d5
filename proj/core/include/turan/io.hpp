#ifndef TURAN_IO_HPP
#define TURAN_IO_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "turan/criteria.hpp"
#include "turan/density.hpp"
#include "turan/families.hpp"
#include "turan/scan.hpp"

namespace turan {

/// Exact numbers serialize as "num/den" strings, floating ones as JSON numbers.
nlohmann::json to_json(const Number& x);

/// Accepts "p/q" or decimal strings, [num, den] integer pairs, and JSON numbers.
/// JSON numbers are read as the shortest decimal that round-trips them, so 0.2
/// becomes 1/5.
Number number_from_json(const nlohmann::json& j);

/// {"kind": ..., "params": {...}, "alpha": [...], "gamma": [...]}; Example2 also
/// accepts "epsilon"/"delta" tables. Throws SpecError on malformed documents.
FamilySpec family_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FamilySpec& spec);

/// `source` is inline JSON when it starts with '{', otherwise a file path.
FamilySpec load_family_spec(std::string_view source);

nlohmann::json to_json(const Condition& c);
nlohmann::json to_json(const CriterionReport& report);
nlohmann::json to_json(const LemmaReport& report);
nlohmann::json to_json(const LambdaData& data);
nlohmann::json to_json(const TuranReport& report);
nlohmann::json to_json(const DensityEstimate& estimate);

/// n,x_min,delta_min,nonnegative
std::string to_csv(const TuranReport& report);
/// x,f_N,density,last_change,valid
std::string to_csv(const DensityEstimate& estimate);

/// Shortest round-trip decimal for a double.
std::string format_double(double x);

}  // namespace turan

#endif  // TURAN_IO_HPP
