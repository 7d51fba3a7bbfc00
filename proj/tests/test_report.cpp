#include <catch_amalgamated.hpp>
#include <json.hpp>

#include "fisherq/errors.hpp"
#include "fisherq/report.hpp"

using namespace fisherq;

namespace {

RunReport sample_report() {
  RunReport r{"fisherq table", {}, {}, 12.5};
  r.rows.push_back({1.0, 1.39235164153, 1.35353312, 1.29658999,
                    reference_row(1.0), {}});
  r.rows.push_back({10000.0, 22.861608870, 18.04383589, 15.852640, std::nullopt,
                    {}});
  r.rows.push_back({0.5, std::nullopt, 1.2, 1.1, std::nullopt, "no convergence"});
  return r;
}

}  // namespace

TEST_CASE("CSV layout and round trip", "[report]") {
  const RunReport r = sample_report();
  const std::string csv = render_table(r, OutputFormat::Csv);
  CHECK(csv.rfind("lambda,E_num,E_inferred,cr_product\n", 0) == 0);

  const auto rows = parse_table_csv(csv);
  REQUIRE(rows.size() == r.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].lambda == round_sig9(r.rows[i].lambda));
    CHECK(rows[i].e_num.has_value() == r.rows[i].e_num.has_value());
    if (rows[i].e_num) CHECK(*rows[i].e_num == round_sig9(*r.rows[i].e_num));
    CHECK(*rows[i].e_inferred == round_sig9(*r.rows[i].e_inferred));
    CHECK(*rows[i].cr_product == round_sig9(*r.rows[i].cr_product));
  }
  CHECK_THROWS_AS(parse_table_csv("a,b\n1,2\n"), DomainError);
  CHECK_THROWS_AS(parse_table_csv("lambda,E_num,E_inferred,cr_product\n1,x,2,3\n"),
                  DomainError);
}

TEST_CASE("JSON round trip", "[report]") {
  const RunReport r = sample_report();
  const auto doc = nlohmann::json::parse(render_table(r, OutputFormat::Json));
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["E_num"].get<double>() == round_sig9(1.39235164153));
  CHECK(doc["rows"][0]["reference"]["E_num"].get<double>() == 1.392351);
  CHECK(doc["rows"][1]["reference"].is_null());
  CHECK(doc["rows"][2]["E_num"].is_null());
  CHECK(doc["rows"][2]["error"] == "no convergence");
  CHECK(doc["elapsed_ms"].get<double>() == 12.5);
}

TEST_CASE("text mode uses six decimals", "[report]") {
  const std::string text = render_table(sample_report(), OutputFormat::Text);
  CHECK(text.find("1.392352") != std::string::npos);
  CHECK(text.find("1.353533") != std::string::npos);
  CHECK(text.find("no convergence") != std::string::npos);
  CHECK(text.find("elapsed") == std::string::npos);
}

TEST_CASE("format names", "[report]") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
  CHECK(round_sig9(1.23456789012) == 1.23456789);
}
