#include "turan/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace turan {

namespace {

using nlohmann::json;

json optional_index(const std::optional<std::size_t>& n) { return n ? json(*n) : json(nullptr); }

json optional_number(const std::optional<Number>& x) { return x ? to_json(*x) : json(nullptr); }

std::vector<Number> number_list(const json& j, const char* key) {
  std::vector<Number> out;
  if (!j.contains(key)) {
    return out;
  }
  const json& list = j.at(key);
  if (!list.is_array()) {
    throw SpecError(std::string("'") + key + "' must be an array");
  }
  out.reserve(list.size());
  for (const auto& item : list) {
    out.push_back(number_from_json(item));
  }
  return out;
}

const char* to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Holds:
      return "holds";
    case ConditionStatus::Violated:
      return "violated";
    case ConditionStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

json to_json(const Number& x) {
  if (x.is_exact()) {
    return format_rational(x.exact());
  }
  const double d = x.to_double();
  if (!std::isfinite(d)) {
    return format_double(d);
  }
  return d;
}

Number number_from_json(const json& j) {
  try {
    if (j.is_string()) {
      return Number::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
      return Number(parse_rational(j.dump()));
    }
    if (j.is_number_float()) {
      return Number(parse_rational(format_double(j.get<double>())));
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
      return Number(parse_rational(j[0].dump() + "/" + j[1].dump()));
    }
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("bad number ") + j.dump() + ": " + e.what());
  }
  throw SpecError("expected a number, a rational string, or [num, den]; got " + j.dump());
}

FamilySpec family_spec_from_json(const json& j) {
  if (!j.is_object()) {
    throw SpecError("family spec must be a JSON object");
  }
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw SpecError("family spec needs a string field 'kind'");
  }
  const std::string kind_name = j.at("kind").get<std::string>();
  const auto kind = family_kind_from_string(kind_name);
  if (!kind) {
    throw SpecError("unknown family kind '" + kind_name + "'");
  }
  FamilySpec spec;
  spec.kind = *kind;
  if (j.contains("params")) {
    const json& params = j.at("params");
    if (!params.is_object()) {
      throw SpecError("'params' must be an object");
    }
    for (const auto& [key, value] : params.items()) {
      spec.params.emplace(key, number_from_json(value));
    }
  }
  spec.alpha = number_list(j, "alpha");
  spec.gamma = number_list(j, "gamma");
  spec.epsilon = number_list(j, "epsilon");
  spec.delta = number_list(j, "delta");
  if (spec.kind == FamilyKind::Table && (spec.alpha.empty() || spec.gamma.empty())) {
    throw SpecError("table family needs 'alpha' and 'gamma' arrays");
  }
  return spec;
}

json to_json(const FamilySpec& spec) {
  json j;
  j["kind"] = to_string(spec.kind);
  json params = json::object();
  for (const auto& [key, value] : spec.params) {
    params[key] = to_json(value);
  }
  j["params"] = params;
  auto list = [](const std::vector<Number>& values) {
    json arr = json::array();
    for (const auto& v : values) {
      arr.push_back(to_json(v));
    }
    return arr;
  };
  if (!spec.alpha.empty()) {
    j["alpha"] = list(spec.alpha);
    j["gamma"] = list(spec.gamma);
  }
  if (!spec.epsilon.empty()) {
    j["epsilon"] = list(spec.epsilon);
    j["delta"] = list(spec.delta);
  }
  return j;
}

FamilySpec load_family_spec(std::string_view source) {
  std::string text;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && source[first] == '{') {
    text = std::string(source);
  } else {
    std::ifstream in{std::string(source)};
    if (!in) {
      throw SpecError("cannot read family spec '" + std::string(source) + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed family spec: ") + e.what());
  }
  return family_spec_from_json(j);
}

json to_json(const Condition& c) {
  json j;
  j["label"] = c.label;
  j["holds"] = c.holds();
  j["status"] = to_string(c.status);
  j["first_violation"] = optional_index(c.first_violation);
  if (c.witness) {
    j["witness"] = json::array({to_json(c.witness->lhs), to_json(c.witness->rhs)});
    j["relation"] = to_string(c.witness->relation);
  } else {
    j["witness"] = nullptr;
  }
  if (c.first_inconclusive) {
    j["first_inconclusive"] = *c.first_inconclusive;
  }
  if (!c.note.empty()) {
    j["note"] = c.note;
  }
  return j;
}

json to_json(const CriterionReport& report) {
  json j;
  j["criterion"] = to_string(report.criterion);
  j["checked_up_to"] = report.checked_up_to;
  j["overall"] = to_string(report.overall);
  j["arithmetic"] = report.exact ? "rational" : "float";
  json conditions = json::array();
  for (const auto& c : report.conditions) {
    conditions.push_back(to_json(c));
  }
  j["conditions"] = conditions;
  if (!report.auxiliary.empty()) {
    json aux = json::array();
    for (const auto& c : report.auxiliary) {
      aux.push_back(to_json(c));
    }
    j["auxiliary"] = aux;
  }
  if (!report.notes.empty()) {
    j["notes"] = report.notes;
  }
  return j;
}

json to_json(const LemmaReport& report) {
  json j;
  j["arithmetic"] = report.exact ? "rational" : "float";
  json rows = json::array();
  for (std::size_t n = 0; n < report.g.size(); ++n) {
    rows.push_back({{"n", n},
                    {"g", to_json(report.g[n])},
                    {"lower", report.exact ? json("1/1") : json(1.0)},
                    {"upper", optional_number(report.upper[n])}});
  }
  j["ratios"] = rows;
  json conditions = json::array();
  for (const auto& c : report.conditions) {
    conditions.push_back(to_json(c));
  }
  j["conditions"] = conditions;
  j["holds"] = report.holds();
  return j;
}

json to_json(const LambdaData& data) {
  json j;
  j["arithmetic"] = data.exact ? "rational" : "float";
  json rows = json::array();
  for (std::size_t n = 0; n < data.u.size(); ++n) {
    rows.push_back({{"n", n},
                    {"u", to_json(data.u[n])},
                    {"v", to_json(data.v[n])},
                    {"lambda", optional_number(data.lambda[n])},
                    {"y", optional_number(data.y[n])},
                    {"valid", static_cast<bool>(data.valid[n])}});
  }
  j["entries"] = rows;
  return j;
}

json to_json(const TuranReport& report) {
  json j;
  j["n_range"] = json::array({report.n_first, report.n_last});
  j["grid"] = {{"kind", report.grid_kind}, {"points", report.grid_points}};
  j["tolerance"] = report.tolerance;
  j["normalized"] = report.normalized;
  json rows = json::array();
  for (const auto& r : report.per_n) {
    rows.push_back({{"n", r.n},
                    {"min_value", r.min_value},
                    {"argmin_x", r.argmin_x},
                    {"scale", r.scale},
                    {"nonnegative", r.nonnegative},
                    {"confirmed_extended", r.confirmed}});
  }
  j["per_n"] = rows;
  j["all_nonnegative"] = report.all_nonnegative();
  if (report.sigma_log_concave) {
    j["sigma_log_concave"] = *report.sigma_log_concave;
    j["sigma_first_violation"] = optional_index(report.sigma_first_violation);
  }
  return j;
}

json to_json(const DensityEstimate& est) {
  json j;
  j["N"] = est.N;
  json rows = json::array();
  for (std::size_t i = 0; i < est.xs.size(); ++i) {
    rows.push_back({{"x", est.xs[i]},
                    {"f_N", est.f_values[i]},
                    {"density", est.density[i]},
                    {"last_change", est.last_change[i]},
                    {"doubling_change", est.doubling_change[i]},
                    {"valid", static_cast<bool>(est.valid[i])}});
  }
  j["points"] = rows;
  j["final_offdiag"] = est.final_offdiag;
  j["offdiag_converged"] = est.offdiag_converged;
  j["variation_partial_sum"] = est.variation_partial_sum;
  j["variation_within_cap"] = est.variation_within_cap;
  j["warnings"] = est.warnings;
  return j;
}

std::string to_csv(const TuranReport& report) {
  std::ostringstream out;
  out << "n,x_min,delta_min,nonnegative\n";
  for (const auto& r : report.per_n) {
    out << r.n << ',' << format_double(r.argmin_x) << ',' << format_double(r.min_value) << ','
        << (r.nonnegative ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_csv(const DensityEstimate& est) {
  std::ostringstream out;
  out << "x,f_N,density,last_change,valid\n";
  for (std::size_t i = 0; i < est.xs.size(); ++i) {
    out << format_double(est.xs[i]) << ',' << format_double(est.f_values[i]) << ',' << format_double(est.density[i])
        << ',' << format_double(est.last_change[i]) << ',' << (est.valid[i] ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace turan
