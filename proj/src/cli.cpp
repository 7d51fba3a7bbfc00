#include "fisherq/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fisherq/checks.hpp"
#include "fisherq/errors.hpp"
#include "fisherq/oracle.hpp"
#include "fisherq/quartic.hpp"
#include "fisherq/reference_table.hpp"
#include "fisherq/report.hpp"

namespace fisherq::cli {

namespace {

struct Options {
  double k = 1.0;
  std::string lambda;
  std::string convention = "literature";
  std::string format = "text";
  std::string suite = "all";
  int basis_size = SolverConfig{}.basis_size;
  std::string out_path;
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string echo(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ' ';
    s += i == 0 ? std::string("fisherq") : args[i];
  }
  return s;
}

std::vector<double> default_grid() {
  std::vector<double> grid;
  for (const auto& row : reference_table()) grid.push_back(row.lambda);
  return grid;
}

SolverConfig solver_config(const Options& o) {
  SolverConfig config;
  config.basis_size = o.basis_size;
  config.validate();
  return config;
}

int cmd_infer(const Options& o, std::ostream& out) {
  const Convention convention = parse_convention(o.convention);
  const OutputFormat format = parse_format(o.format);
  const auto lambdas =
      o.lambda.empty() ? std::vector<double>{0.0} : parse_lambda_list(o.lambda);
  for (double lambda : lambdas) {
    const OscillatorSpec spec{o.k, lambda, convention};
    out << render_inference(spec, infer_ground_state(spec), format);
  }
  return kSuccess;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const Convention convention = parse_convention(o.convention);
  const OutputFormat format = parse_format(o.format);
  const SolverConfig config = solver_config(o);
  const auto lambdas =
      o.lambda.empty() ? std::vector<double>{0.0} : parse_lambda_list(o.lambda);
  int code = kSuccess;
  for (double lambda : lambdas) {
    const OscillatorSpec spec{o.k, lambda, convention};
    try {
      out << render_oracle(spec, solve_ground_state(spec, config), format);
    } catch (const ConvergenceError& e) {
      err << "lambda " << lambda << ": " << e.what() << '\n';
      code = kConvergenceError;
    }
  }
  return code;
}

int cmd_table(const Options& o, const std::string& command, std::ostream& out,
              std::ostream& err) {
  Stopwatch timer;
  const Convention convention = parse_convention(o.convention);
  const OutputFormat format = parse_format(o.format);
  const SolverConfig config = solver_config(o);
  const auto lambdas =
      o.lambda.empty() ? default_grid() : parse_lambda_list(o.lambda);

  RunReport report{command, {}, {}, 0.0};
  int code = kSuccess;
  for (double lambda : lambdas) {
    const OscillatorSpec spec{o.k, lambda, convention};
    TableRow row{lambda, std::nullopt, std::nullopt, std::nullopt,
                 std::nullopt, {}};
    if (o.k == 1.0 && convention == Convention::Literature)
      row.reference = reference_row(lambda);
    try {
      const InferenceResult r = infer_ground_state(spec);
      row.e_inferred = r.energy;
      row.cr_product = r.cr_product;
    } catch (const DomainError& e) {
      row.error = e.what();
      code = kUsageError;
    }
    try {
      row.e_num = solve_ground_state(spec, config).eigenvalue;
    } catch (const ConvergenceError& e) {
      row.error = e.what();
      err << "lambda " << lambda << ": " << e.what() << '\n';
      if (code == kSuccess) code = kConvergenceError;
    }
    report.rows.push_back(std::move(row));
  }
  report.elapsed_ms = timer.elapsed_ms();
  out << render_table(report, format);
  return code;
}

int cmd_check(const Options& o, const std::string& command, std::ostream& out) {
  Stopwatch timer;
  const OutputFormat format = parse_format(o.format);
  const SolverConfig config = solver_config(o);
  RunReport report{command, {}, {}, 0.0};
  if (o.suite == "identities" || o.suite == "all") {
    auto r = run_identity_checks(config);
    report.checks.insert(report.checks.end(), r.begin(), r.end());
  }
  if (o.suite == "table" || o.suite == "all") {
    auto r = run_table_checks(config);
    report.checks.insert(report.checks.end(), r.begin(), r.end());
  }
  report.elapsed_ms = timer.elapsed_ms();
  out << render_checks(report, format);
  return all_passed(report.checks) ? kSuccess : kCheckFailure;
}

}  // namespace

std::vector<double> parse_lambda_list(std::string_view text) {
  std::vector<double> values;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw DomainError("empty entry in lambda list");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError("cannot parse lambda '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v))
      throw DomainError("cannot parse lambda '" + item + "'");
    if (v < 0.0) throw DomainError("lambda must be >= 0");
    values.push_back(v);
  }
  if (values.empty() || (!text.empty() && text.back() == ','))
    throw DomainError("lambda list is empty or malformed");
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fisher-information inference of quartic oscillator ground states"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", o.out_path, "write the report to this file");
  };
  auto add_oscillator = [&o](CLI::App* sub) {
    sub->add_option("--k", o.k, "harmonic coefficient (>= 0)");
    sub->add_option("--lambda", o.lambda,
                    "anharmonicity, single value or comma list");
    sub->add_option("--convention", o.convention, "literature|paper")
        ->check(CLI::IsMember({"literature", "paper"}));
  };

  auto* infer = app.add_subcommand("infer", "Fisher inference of E, I, moments");
  add_oscillator(infer);
  add_common(infer);

  auto* table = app.add_subcommand("table", "inference and solver per lambda");
  add_oscillator(table);
  add_common(table);
  table->add_option("--basis-size", o.basis_size, "reference solver basis size");

  auto* oracle = app.add_subcommand("oracle", "reference Schrodinger solver");
  add_oscillator(oracle);
  add_common(oracle);
  oracle->add_option("--basis-size", o.basis_size, "basis size");

  auto* check = app.add_subcommand("check", "run the identity and table suites");
  check->add_option("--suite", o.suite, "identities|table|all")
      ->check(CLI::IsMember({"identities", "table", "all"}));
  check->add_option("--basis-size", o.basis_size, "reference solver basis size");
  add_common(check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  std::ostringstream buffer;
  const std::string command = echo(args);
  int code = kSuccess;
  try {
    if (infer->parsed()) {
      code = cmd_infer(o, buffer);
    } else if (table->parsed()) {
      if (table->count("--lambda") && o.lambda.empty())
        throw DomainError("--lambda must not be empty");
      code = cmd_table(o, command, buffer, err);
    } else if (oracle->parsed()) {
      code = cmd_oracle(o, buffer, err);
    } else {
      code = cmd_check(o, command, buffer);
    }
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kConvergenceError;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "cannot open " << o.out_path << " for writing\n";
      return kUsageError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace fisherq::cli
