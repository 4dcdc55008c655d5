#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "turan/criteria.hpp"
#include "turan/density.hpp"
#include "turan/families.hpp"
#include "turan/io.hpp"
#include "turan/scan.hpp"

namespace turan::cli {

namespace {

using nlohmann::json;

const char* to_string(Command c) {
  switch (c) {
    case Command::Families:
      return "families";
    case Command::Check:
      return "check";
    case Command::Scan:
      return "scan";
    case Command::Ratios:
      return "ratios";
    case Command::Lambda:
      return "lambda";
    case Command::Density:
      return "density";
  }
  return "?";
}

const char* to_string(ArithmeticMode m) {
  switch (m) {
    case ArithmeticMode::Auto:
      return "auto";
    case ArithmeticMode::Rational:
      return "rational";
    case ArithmeticMode::Float:
      return "float";
  }
  return "?";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ArithmeticOptions arithmetic_options(const RunConfig& config) {
  ArithmeticOptions options;
  options.mode = config.mode;
  options.precision = config.precision;
  options.digit_cap = config.digit_cap;
  if (config.margin) {
    options.margin = *config.margin;
  }
  return options;
}

json envelope(const RunConfig& config, const FamilySpec* spec) {
  json j;
  j["command"] = to_string(config.command);
  if (spec != nullptr) {
    j["family"] = to_json(*spec);
  }
  j["mode"] = to_string(config.mode);
  if (!config.reproducible) {
    j["generated_at"] = utc_timestamp();
  }
  return j;
}

json families_catalogue() {
  json kinds = json::array();
  for (const auto& info : family_kinds()) {
    kinds.push_back({{"kind", to_string(info.kind)},
                     {"parameters", info.parameters},
                     {"constraints", info.constraints},
                     {"coefficients", info.coefficients}});
  }
  return kinds;
}

std::string families_csv() {
  std::ostringstream out;
  out << "kind,parameters,constraints\n";
  for (const auto& info : family_kinds()) {
    out << to_string(info.kind) << ",\"" << info.parameters << "\",\"" << info.constraints << "\"\n";
  }
  return out.str();
}

std::string lemma_csv(const LemmaReport& report) {
  std::ostringstream out;
  out << "n,g,lower,upper\n";
  for (std::size_t n = 0; n < report.g.size(); ++n) {
    out << n << ',' << report.g[n].to_string() << ',' << (report.exact ? "1/1" : "1") << ','
        << (report.upper[n] ? report.upper[n]->to_string() : std::string("inf")) << '\n';
  }
  return out.str();
}

std::string lambda_csv(const LambdaData& data) {
  std::ostringstream out;
  out << "n,u,v,lambda,y,valid\n";
  auto opt = [](const std::optional<Number>& x) { return x ? x->to_string() : std::string(); };
  for (std::size_t n = 0; n < data.u.size(); ++n) {
    out << n << ',' << data.u[n].to_string() << ',' << data.v[n].to_string() << ',' << opt(data.lambda[n]) << ','
        << opt(data.y[n]) << ',' << (data.valid[n] ? "true" : "false") << '\n';
  }
  return out.str();
}

/// Output text and exit code of one command.
struct Outcome {
  std::string text;
  int exit_code = kExitOk;
};

Outcome execute(const RunConfig& config) {
  const bool csv = config.format == Format::Csv;
  if (config.command == Command::Families) {
    if (csv) {
      return {families_csv(), kExitOk};
    }
    json j = envelope(config, nullptr);
    j["kinds"] = families_catalogue();
    return {j.dump(2) + "\n", kExitOk};
  }

  const FamilySpec spec = load_family_spec(config.family);
  const CoefficientFamily family = build(spec);
  const ArithmeticOptions arithmetic = arithmetic_options(config);
  json j = envelope(config, &spec);

  switch (config.command) {
    case Command::Check: {
      const Classification result = run_criteria(family, config.N, arithmetic);
      json reports = json::array();
      bool all_satisfied = true;
      for (const auto& report : result.reports) {
        reports.push_back(to_json(report));
        all_satisfied = all_satisfied && report.overall == Verdict::Satisfied;
      }
      json certified = json::array();
      for (const Criterion c : result.certified) {
        certified.push_back(turan::to_string(c));
      }
      j["N"] = config.N;
      j["reports"] = reports;
      j["certified"] = certified;
      j["unchecked"] = result.unchecked;
      return {j.dump(2) + "\n", all_satisfied ? kExitOk : kExitFailed};
    }
    case Command::Scan: {
      ScanOptions options;
      options.arithmetic = arithmetic;
      if (config.scan_tolerance) {
        options.tolerance = *config.scan_tolerance;
      }
      const TuranReport report =
          grid_scan(family, config.n_max.value_or(config.N), config.grid_points, !config.raw, options);
      const int code = report.all_nonnegative() ? kExitOk : kExitFailed;
      if (csv) {
        return {to_csv(report), code};
      }
      j["report"] = to_json(report);
      return {j.dump(2) + "\n", code};
    }
    case Command::Ratios: {
      const LemmaReport report = check_lemma_bounds(family, config.N, arithmetic);
      const int code = report.holds() ? kExitOk : kExitFailed;
      if (csv) {
        return {lemma_csv(report), code};
      }
      j["N"] = config.N;
      j["report"] = to_json(report);
      return {j.dump(2) + "\n", code};
    }
    case Command::Lambda: {
      const LambdaData data = lambda_data(family, config.N, arithmetic);
      const CriterionReport lambda_route = check_lambda_route(family, config.N, arithmetic);
      const CriterionReport y_route = check_y_route(family, config.N, arithmetic);
      const bool ok = lambda_route.overall == Verdict::Satisfied && y_route.overall == Verdict::Satisfied;
      const int code = ok ? kExitOk : kExitFailed;
      if (csv) {
        return {lambda_csv(data), code};
      }
      j["N"] = config.N;
      j["data"] = to_json(data);
      j["routes"] = json::array({to_json(lambda_route), to_json(y_route)});
      return {j.dump(2) + "\n", code};
    }
    case Command::Density: {
      const auto xs = density_grid(config.density_points);
      const DensityEstimate estimate = estimate_density(family, config.N, xs);
      const int code = estimate.all_valid() ? kExitOk : kExitFailed;
      if (csv) {
        return {to_csv(estimate), code};
      }
      j["report"] = to_json(estimate);
      return {j.dump(2) + "\n", code};
    }
    case Command::Families:
      break;
  }
  return {"", kExitUsage};
}

}  // namespace

std::optional<std::string> validate(const RunConfig& config) {
  if (config.command != Command::Families && config.family.empty()) {
    return "--family is required";
  }
  if (config.N < 1) {
    return "--N must be >= 1";
  }
  if ((config.command == Command::Check || config.command == Command::Lambda) && config.N < 2) {
    return "--N must be >= 2 for criterion checks";
  }
  if (config.command == Command::Density && config.N < 10) {
    return "--N must be >= 10 for density estimation";
  }
  if (config.n_max && *config.n_max < 1) {
    return "--n-max must be >= 1";
  }
  if (config.grid_points < 3) {
    return "--grid must be >= 3";
  }
  if (config.format == Format::Csv && config.command == Command::Check) {
    return "check reports are JSON only";
  }
  return std::nullopt;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                            int& exit_code) {
  CLI::App app{"Turan determinant criteria, scans and density reconstruction"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string mode = "auto";
  std::string precision = "double";
  std::size_t n_value = 0;

  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};
  const std::map<std::string, ArithmeticMode> modes{
      {"auto", ArithmeticMode::Auto}, {"rational", ArithmeticMode::Rational}, {"float", ArithmeticMode::Float}};
  const std::map<std::string, FloatPrecision> precisions{{"double", FloatPrecision::Double},
                                                         {"extended", FloatPrecision::Extended}};

  auto common = [&](CLI::App* sub, bool needs_family) {
    auto* family = sub->add_option("--family", config.family, "Family spec: a JSON file path or inline JSON");
    if (needs_family) {
      family->required();
    }
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", config.output, "Write the report here instead of stdout");
    sub->add_flag("--reproducible", config.reproducible, "Omit the timestamp field");
    sub->add_option("--mode", mode, "Arithmetic mode")->check(CLI::IsMember({"auto", "rational", "float"}));
    sub->add_option("--precision", precision, "Floating precision")->check(CLI::IsMember({"double", "extended"}));
    sub->add_option("--margin", config.margin, "Relative margin for floating comparisons");
    sub->add_option("--digit-cap", config.digit_cap, "Rational digit cap before falling back to extended floats");
    sub->add_option("--N", n_value, "Horizon (highest index checked)");
  };

  auto* families = app.add_subcommand("families", "List built-in family kinds and their constraints");
  std::string families_action = "list";
  families->add_option("action", families_action, "Only 'list' is supported")->check(CLI::IsMember({"list"}));
  common(families, false);

  auto* check = app.add_subcommand("check", "Run every applicable sufficient criterion");
  common(check, true);

  auto* scan = app.add_subcommand("scan", "Grid scan of Turan determinants on [-1, 1]");
  common(scan, true);
  scan->add_option("--n-max", config.n_max, "Highest degree scanned (default: N)");
  scan->add_option("--grid", config.grid_points, "Points per grid component (uniform and Chebyshev)");
  scan->add_option("--tol", config.scan_tolerance, "Relative sign tolerance");
  scan->add_flag("--raw", config.raw, "Scan p_n rather than p_n / p_n(1)");

  auto* ratios = app.add_subcommand("ratios", "Ratios g_n = p_{n+1}(1)/p_n(1) with their lemma bounds");
  common(ratios, true);

  auto* lambda = app.add_subcommand("lambda", "u_n, v_n, lambda_n, y_n with the lambda and y route verdicts");
  common(lambda, true);

  auto* density = app.add_subcommand("density", "Density reconstruction from orthonormal Turan determinants");
  common(density, true);
  density->add_option("--points", config.density_points, "Uniform points in [-0.99, 0.99]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    exit_code = kExitOk;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    exit_code = kExitUsage;
    return std::nullopt;
  }

  if (families->parsed()) {
    config.command = Command::Families;
  } else if (check->parsed()) {
    config.command = Command::Check;
  } else if (scan->parsed()) {
    config.command = Command::Scan;
  } else if (ratios->parsed()) {
    config.command = Command::Ratios;
  } else if (lambda->parsed()) {
    config.command = Command::Lambda;
  } else {
    config.command = Command::Density;
  }
  config.format = formats.at(format);
  config.mode = modes.at(mode);
  config.precision = precisions.at(precision);
  if (n_value != 0) {
    config.N = n_value;
  } else if (config.command == Command::Density) {
    config.N = 10000;
  }
  if (const auto problem = validate(config)) {
    err << "error: " << *problem << "\n";
    exit_code = kExitUsage;
    return std::nullopt;
  }
  exit_code = kExitOk;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (const auto problem = validate(config)) {
    err << "error: " << *problem << "\n";
    return kExitUsage;
  }
  Outcome outcome;
  try {
    outcome = execute(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (config.output.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << config.output << "'\n";
      return kExitUsage;
    }
    file << outcome.text;
  }
  return outcome.exit_code;
}

}  // namespace turan::cli
