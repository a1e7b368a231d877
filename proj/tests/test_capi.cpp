#include <doctest.h>

#include <string>

#include "qsw/qsw.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qsw_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version") { CHECK(std::string(qsw_version()) == "1.0.0"); }

TEST_CASE("elements") {
  qsw_element *a = nullptr, *b = nullptr, *ab = nullptr, *c = nullptr;
  REQUIRE(qsw_element_parse("e[1]", 2, &a) == QSW_OK);
  REQUIRE(qsw_element_parse("e[2]", 2, &b) == QSW_OK);
  REQUIRE(qsw_element_product(a, b, &ab) == QSW_OK);
  char* s = nullptr;
  REQUIRE(qsw_element_to_string(ab, &s) == QSW_OK);
  CHECK(take(s) == "e[1,2]");
  REQUIRE(qsw_element_parse("e1 e2", 2, &c) == QSW_OK);
  int eq = 0;
  CHECK(qsw_element_equal(ab, c, &eq) == QSW_OK);
  CHECK(eq == 1);
  CHECK(qsw_element_equal(a, c, &eq) == QSW_OK);
  CHECK(eq == 0);
  for (auto* x : {a, b, ab, c}) qsw_element_free(x);
}

TEST_CASE("error codes") {
  qsw_element* x = nullptr;
  CHECK(qsw_element_parse("e[1,", 2, &x) == QSW_PARSE);
  CHECK(std::string(qsw_last_error()).find("position") != std::string::npos);
  CHECK(qsw_element_parse("e[3]", 2, &x) == QSW_DIMENSION);
  CHECK(qsw_element_parse(nullptr, 2, &x) == QSW_INVALID_ARGUMENT);
  qsw_element *a = nullptr, *b = nullptr, *ab = nullptr;
  REQUIRE(qsw_element_parse("e[1]", 2, &a) == QSW_OK);
  CHECK(std::string(qsw_last_error()).empty());
  REQUIRE(qsw_element_parse("e[1]", 3, &b) == QSW_OK);
  CHECK(qsw_element_product(a, b, &ab) == QSW_DIMENSION);
  qsw_element_free(a);
  qsw_element_free(b);
  char* s = nullptr;
  CHECK(qsw_matrix_json("zz", 2, 1, &s) == QSW_INVALID_ARGUMENT);
}

TEST_CASE("eval") {
  char* s = nullptr;
  REQUIRE(qsw_eval("K1 e[1,2]", 2, &s) == QSW_OK);
  CHECK(take(s) == "(q) e[1,2]");
  REQUIRE(qsw_eval("R(e*1) e[1,1,2]", 2, &s) == QSW_OK);
  CHECK(take(s) == "t1*t2 e[1,2] + (q^-1) t2 e[1,2]");
}

TEST_CASE("suites") {
  qsw_suite_config cfg;
  qsw_suite_config_init(&cfg);
  cfg.suite = "thm5-3";
  cfg.reproducible = 1;
  qsw_report* r = nullptr;
  REQUIRE(qsw_run_suite(&cfg, &r) == QSW_OK);
  CHECK(qsw_report_failed(r) == 0);
  char* s = nullptr;
  REQUIRE(qsw_report_render(r, QSW_FORMAT_JSON, &s) == QSW_OK);
  const std::string json = take(s);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
  CHECK(json.find("timestamp") == std::string::npos);
  REQUIRE(qsw_report_render(r, QSW_FORMAT_TEXT, &s) == QSW_OK);
  CHECK(take(s).find("result: PASS") != std::string::npos);
  qsw_report_free(r);

  cfg.suite = "duality";
  cfg.q0 = "2";
  CHECK(qsw_run_suite(&cfg, &r) == QSW_CONFIG);
  cfg.q0 = nullptr;
  cfg.symbolic = 1;
  CHECK(qsw_run_suite(&cfg, &r) == QSW_CONFIG);
  cfg.symbolic = 0;
  cfg.n = 9;
  CHECK(qsw_run_suite(&cfg, &r) == QSW_CONFIG);
}

TEST_CASE("matrix json") {
  char* s = nullptr;
  REQUIRE(qsw_matrix_json("e1", 2, 1, &s) == QSW_OK);
  const std::string j = take(s);
  CHECK(j.find("\"name\": \"e1\"") != std::string::npos);
  CHECK(j.find("e[2]") != std::string::npos);
}
