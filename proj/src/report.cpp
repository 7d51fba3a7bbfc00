#include "fisherq/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "fisherq/errors.hpp"

namespace fisherq {

using nlohmann::json;

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string sig9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string opt_sig9(const std::optional<double>& x) {
  return x ? sig9(*x) : std::string();
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig9(x);
}

json opt_number(const std::optional<double>& x) {
  return x ? number(*x) : json(nullptr);
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

}  // namespace

double round_sig9(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(sig9(x).c_str(), nullptr);
}

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw DomainError("unknown format '" + std::string(name) + "'");
}

std::string render_table(const RunReport& report, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Csv:
      os << kTableCsvHeader << '\n';
      for (const auto& r : report.rows)
        os << sig9(r.lambda) << ',' << opt_sig9(r.e_num) << ','
           << opt_sig9(r.e_inferred) << ',' << opt_sig9(r.cr_product) << '\n';
      break;
    case OutputFormat::Json: {
      json rows = json::array();
      for (const auto& r : report.rows) {
        json row{{"lambda", number(r.lambda)},
                 {"E_num", opt_number(r.e_num)},
                 {"E_inferred", opt_number(r.e_inferred)},
                 {"cr_product", opt_number(r.cr_product)}};
        if (r.reference) {
          row["reference"] = {{"E_num", number(r.reference->e_numerical)},
                              {"E_inferred", number(r.reference->e_inferred)},
                              {"cr_product", number(r.reference->cr_product)}};
        } else {
          row["reference"] = nullptr;
        }
        if (!r.error.empty()) row["error"] = r.error;
        rows.push_back(std::move(row));
      }
      json doc{{"command", report.command},
               {"rows", rows},
               {"elapsed_ms", report.elapsed_ms}};
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text: {
      os << "# " << report.command << '\n';
      os << pad("lambda", 10) << pad("E_num", 12) << pad("E=alpha/8", 12)
         << pad("f=I<x^2>", 12) << " | " << pad("ref E_num", 12)
         << pad("ref E", 12) << pad("ref f", 12) << '\n';
      auto cell = [](const std::optional<double>& x) {
        return pad(x ? fixed6(*x) : "-", 12);
      };
      for (const auto& r : report.rows) {
        char lam[32];
        std::snprintf(lam, sizeof lam, "%g", r.lambda);
        os << pad(lam, 10) << cell(r.e_num) << cell(r.e_inferred)
           << cell(r.cr_product) << " | ";
        if (r.reference) {
          os << cell(r.reference->e_numerical) << cell(r.reference->e_inferred)
             << cell(r.reference->cr_product);
        } else {
          os << pad("-", 12) << pad("-", 12) << pad("-", 12);
        }
        if (!r.error.empty()) os << "  ! " << r.error;
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string render_checks(const RunReport& report, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Csv:
      os << "check,passed,value,tolerance\n";
      for (const auto& c : report.checks)
        os << '"' << c.name << "\"," << (c.passed ? "true" : "false") << ','
           << sig9(c.value) << ',' << sig9(c.tolerance) << '\n';
      break;
    case OutputFormat::Json: {
      json checks = json::array();
      for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"value", number(c.value)},
                          {"tolerance", number(c.tolerance)}});
      json doc{{"command", report.command},
               {"checks", checks},
               {"passed", all_passed(report.checks)},
               {"elapsed_ms", report.elapsed_ms}};
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      for (const auto& c : report.checks) {
        char line[256];
        std::snprintf(line, sizeof line, "%s  %-62s %.3e (tol %.1e)\n",
                      c.passed ? "PASS" : "FAIL", c.name.c_str(), c.value,
                      c.tolerance);
        os << line;
      }
      os << (all_passed(report.checks) ? "all checks passed\n"
                                       : "some checks FAILED\n");
      break;
  }
  return os.str();
}

std::string render_inference(const OscillatorSpec& spec,
                             const InferenceResult& r, OutputFormat format) {
  const std::vector<std::pair<const char*, double>> fields = {
      {"k", spec.k_harmonic}, {"lambda", spec.lambda_anharmonic},
      {"F2", r.f2},           {"F4", r.f4},
      {"alpha", r.alpha},     {"E", r.energy},
      {"I", r.fisher_info},   {"x2", r.x2},
      {"x4", r.x4},           {"f", r.cr_product}};
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Csv:
      for (std::size_t i = 0; i < fields.size(); ++i)
        os << (i ? "," : "") << fields[i].first;
      os << ",convention\n";
      for (std::size_t i = 0; i < fields.size(); ++i)
        os << (i ? "," : "") << sig9(fields[i].second);
      os << ',' << to_string(spec.convention) << '\n';
      break;
    case OutputFormat::Json: {
      json doc;
      for (const auto& [name, value] : fields) doc[name] = number(value);
      doc["convention"] = std::string(to_string(spec.convention));
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      os << "convention  " << to_string(spec.convention) << '\n';
      for (const auto& [name, value] : fields) {
        char line[96];
        std::snprintf(line, sizeof line, "%-10s  %.6f\n", name, value);
        os << line;
      }
      break;
  }
  return os.str();
}

std::string render_oracle(const OscillatorSpec& spec,
                          const SpectralSolution& sol, OutputFormat format) {
  const std::vector<std::pair<const char*, double>> fields = {
      {"k", spec.k_harmonic},
      {"lambda", spec.lambda_anharmonic},
      {"E_num", sol.eigenvalue},
      {"alpha", sol.alpha},
      {"x2", sol.x2},
      {"x4", sol.x4},
      {"I", sol.fisher_info},
      {"dp2", sol.momentum_variance},
      {"cr_product", cramer_rao_check(sol)},
      {"refinement_shift", sol.refinement_shift}};
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Csv:
      for (std::size_t i = 0; i < fields.size(); ++i)
        os << (i ? "," : "") << fields[i].first;
      os << '\n';
      for (std::size_t i = 0; i < fields.size(); ++i)
        os << (i ? "," : "") << sig9(fields[i].second);
      os << '\n';
      break;
    case OutputFormat::Json: {
      json doc;
      for (const auto& [name, value] : fields) doc[name] = number(value);
      doc["convention"] = std::string(to_string(spec.convention));
      doc["basis_size"] = sol.basis_size;
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      for (const auto& [name, value] : fields) {
        char line[96];
        if (std::string_view(name) == "refinement_shift")
          std::snprintf(line, sizeof line, "%-17s %.3e\n", name, value);
        else
          std::snprintf(line, sizeof line, "%-17s %.6f\n", name, value);
        os << line;
      }
      break;
  }
  return os.str();
}

std::vector<TableRow> parse_table_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != kTableCsvHeader)
    throw DomainError("parse_table_csv: unexpected header");
  auto field = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
      throw DomainError("parse_table_csv: bad number '" + s + "'");
    return v;
  };
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 4)
      throw DomainError("parse_table_csv: expected 4 fields in '" + line + "'");
    const auto lambda = field(cells[0]);
    if (!lambda) throw DomainError("parse_table_csv: missing lambda");
    rows.push_back(TableRow{*lambda, field(cells[1]), field(cells[2]),
                            field(cells[3]), std::nullopt, {}});
  }
  return rows;
}

}  // namespace fisherq
