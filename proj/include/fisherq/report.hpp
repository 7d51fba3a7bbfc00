#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fisherq/checks.hpp"
#include "fisherq/oracle.hpp"
#include "fisherq/quartic.hpp"
#include "fisherq/reference_table.hpp"

namespace fisherq {

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_format(std::string_view name);

/// One lambda of a `table` run. Empty optionals mean "not computed".
struct TableRow {
  double lambda;
  std::optional<double> e_num;
  std::optional<double> e_inferred;
  std::optional<double> cr_product;
  std::optional<ReferenceRow> reference;
  std::string error;
};

struct RunReport {
  std::string command;
  std::vector<TableRow> rows;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0.0;
};

inline constexpr std::string_view kTableCsvHeader =
    "lambda,E_num,E_inferred,cr_product";

/// Text mode uses six decimals; CSV and JSON nine significant digits.
/// Only JSON carries elapsed_ms.
std::string render_table(const RunReport& report, OutputFormat format);
std::string render_checks(const RunReport& report, OutputFormat format);
std::string render_inference(const OscillatorSpec& spec,
                             const InferenceResult& result,
                             OutputFormat format);
std::string render_oracle(const OscillatorSpec& spec,
                          const SpectralSolution& sol, OutputFormat format);

/// Reads rows back from render_table(..., Csv). Throws DomainError on a
/// malformed header or row.
std::vector<TableRow> parse_table_csv(std::string_view csv);

/// x rounded to nine significant digits.
double round_sig9(double x);

}  // namespace fisherq
