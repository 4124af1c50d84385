#include <doctest.h>

#include <json.hpp>

#include "commands.hpp"
#include "emit.hpp"
#include "run_config.hpp"

using namespace jacspec;
using namespace jacspec::cli;

TEST_CASE("cell formatting: 17 significant digits, plain integers") {
  CHECK(format_cell(Cell{0.1}) == "0.10000000000000001");
  CHECK(format_cell(Cell{2.0}) == "2");
  CHECK(format_cell(Cell{std::int64_t{42}}) == "42");
  CHECK(format_cell(Cell{std::string{"tag"}}) == "tag");
  CHECK(format_cell(Cell{-std::numeric_limits<double>::infinity()}) == "-inf");
}

TEST_CASE("csv layout: mandatory header, comma separators, LF rows") {
  Table t;
  t.header = {"a", "b"};
  t.rows.push_back({std::int64_t{1}, 0.5});
  t.rows.push_back({std::int64_t{2}, -1.0});
  CHECK(to_csv(t) == "a,b\n1,0.5\n2,-1\n");
}

TEST_CASE("json carries the same rows under the same names") {
  RunReport rep;
  rep.table.header = {"n", "value"};
  rep.table.rows.push_back({std::int64_t{3}, 0.25});
  rep.verdicts.push_back({"check", true, 1.0});
  RunConfig cfg;
  const auto doc = nlohmann::json::parse(to_json(rep, cfg));
  REQUIRE(doc.contains("config"));
  REQUIRE(doc.contains("rows"));
  REQUIRE(doc.contains("verdicts"));
  CHECK(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["n"] == 3);
  CHECK(doc["rows"][0]["value"] == 0.25);
  CHECK(doc["verdicts"][0]["name"] == "check");
  CHECK(doc["verdicts"][0]["pass"] == true);
  CHECK(doc["config"]["c1"] == 2.0);
}

TEST_CASE("bound overrides fall back to defaults per field") {
  RunConfig cfg;
  const auto d = cfg.bounds();
  CHECK(d.a_plus == doctest::Approx(0.07));
  cfg.a_plus = 0.05;
  const auto o = cfg.bounds();
  CHECK(o.a_plus == doctest::Approx(0.05));
  CHECK(o.b_plus == doctest::Approx(0.13));
  cfg.a_plus = 0.12;  // above p/2, invalid
  CHECK_THROWS_AS(cfg.bounds(), validation_error);
}

TEST_CASE("classify report") {
  const auto rep = run_classify(2.0, 1.0);
  REQUIRE(rep.table.rows.size() == 1);
  CHECK(std::get<std::string>(rep.table.rows[0][2]) == "boundary_critical");
  CHECK(rep.all_pass());
  CHECK_THROWS_AS(run_classify(0.0, 1.0), validation_error);
}

TEST_CASE("expand emits the contracted header and identical csv/json content") {
  RunConfig cfg;
  cfg.grid = 2;
  const auto rep = run_expand(cfg);
  const std::string header =
      "lambda,n,F_exact,F_exp,F_res,G_exact,G_exp,G_res,beta_exact,beta_exp,"
      "beta_res";
  CHECK(to_csv(rep.table).substr(0, header.size()) == header);
  CHECK(rep.table.rows.size() == 14);  // 2 lambdas x 7 abscissae
  CHECK(rep.all_pass());

  // determinism: two runs emit byte-identical tables
  CHECK(to_csv(rep.table) == to_csv(run_expand(cfg).table));

  // same content field-for-field in json
  const auto doc = nlohmann::json::parse(to_json(rep, cfg));
  REQUIRE(doc["rows"].size() == rep.table.rows.size());
  for (std::size_t i = 0; i < rep.table.rows.size(); ++i) {
    for (std::size_t c = 0; c < rep.table.header.size(); ++c) {
      const auto& cell = rep.table.rows[i][c];
      const auto& jv = doc["rows"][i][rep.table.header[c]];
      if (std::holds_alternative<double>(cell)) {
        CHECK(jv.get<double>() == std::get<double>(cell));
      } else if (std::holds_alternative<std::int64_t>(cell)) {
        CHECK(jv.get<std::int64_t>() == std::get<std::int64_t>(cell));
      }
    }
  }

  // off-boundary family is a validation error (CLI exit code 1)
  cfg.c1 = 1.0;
  cfg.c2 = 1.0;
  CHECK_THROWS_AS(run_expand(cfg), validation_error);
}

TEST_CASE("solve dump starts with the boundary pair at lambda = q1") {
  RunConfig cfg;
  cfg.lambda = 1.0;
  cfg.n_max = 64;
  const auto rep = run_solve(cfg);
  REQUIRE(rep.table.rows.size() == 64);
  CHECK(std::get<std::int64_t>(rep.table.rows[0][1]) == 1);   // sign of f1
  CHECK(std::get<double>(rep.table.rows[0][2]) == 0.0);       // log|f1| = 0
  CHECK(std::get<std::int64_t>(rep.table.rows[1][1]) == 0);   // f2 = 0
  CHECK(std::isinf(std::get<double>(rep.table.rows[1][2])));
  CHECK(rep.all_pass());

  cfg.kind = "nonsense";
  CHECK_THROWS_AS(run_solve(cfg), validation_error);
}
