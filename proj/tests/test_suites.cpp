#include <doctest.h>

#include "qsw/suites.hpp"

using namespace qsw;

TEST_CASE("q0 parsing") {
  CHECK(parse_q0("16/9") == Rational(16, 9));
  CHECK(parse_q0("4") == 4);
  CHECK(sqrt_q0(Rational(16, 9)) == Rational(4, 3));
  CHECK_THROWS_AS(parse_q0("2"), ConfigError);
  CHECK_THROWS_AS(parse_q0("-1"), ConfigError);
  CHECK_THROWS_AS(parse_q0("0"), ConfigError);
  CHECK_THROWS_AS(parse_q0("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_q0("abc"), ConfigError);
}

TEST_CASE("configuration errors") {
  SuiteConfig cfg;
  cfg.suite = "nope";
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg.suite = "thm4";
  cfg.n = 0;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg.n = 2;
  cfg.p_max = 7;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg.p_max = 2;
  for (const char* s : {"prop5-5", "duality"}) {
    cfg.suite = s;
    cfg.q0.reset();
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  }
}

TEST_CASE("suites run clean") {
  SuiteConfig cfg;
  cfg.samples = 10;
  cfg.suite = "thm4";
  CHECK(run_suite(cfg).passed());
  cfg.suite = "euler";
  cfg.p_max = 3;
  CHECK(run_suite(cfg).passed());
  cfg.suite = "all";
  cfg.p_max = 0;
  const Report r = run_suite(cfg);
  CHECK(r.passed());
  CHECK(r.records().size() > 0);
}

TEST_CASE("symbolic all skips the specialization suites") {
  SuiteConfig cfg;
  cfg.samples = 5;
  cfg.p_max = 1;
  cfg.q0.reset();
  const Report r = run_suite(cfg);
  CHECK(r.passed());
  CHECK(r.count(CheckStatus::Skip) == 2);
}

TEST_CASE("reports are deterministic") {
  SuiteConfig cfg;
  cfg.samples = 15;
  cfg.seed = 99;
  const std::string a = report_to_json(run_suite(cfg), cfg, true).dump();
  const std::string b = report_to_json(run_suite(cfg), cfg, true).dump();
  CHECK(a == b);
  cfg.seed = 100;
  CHECK(report_to_json(run_suite(cfg), cfg, true).dump() != a);
}

TEST_CASE("report layout") {
  SuiteConfig cfg;
  cfg.suite = "duality";
  const nlohmann::json j = report_to_json(run_suite(cfg), cfg, false);
  CHECK(j["schema"] == 1);
  CHECK(j["status"] == "pass");
  CHECK(j.contains("timestamp"));
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["config"]["q0"] == "16/9");
  const auto& recs = j["records"];
  for (std::size_t k = 1; k < recs.size(); ++k) CHECK(recs[k - 1]["id"] <= recs[k]["id"]);
  CHECK(recs[0].contains("wall_ms"));
  CHECK(j["artifacts"].size() == 2);
  const std::string text = render_text(j);
  CHECK(text.find("result: PASS") != std::string::npos);
  CHECK(text.find("pi_image 10") != std::string::npos);
}

TEST_CASE("failures carry witnesses") {
  Report r;
  check_equal<RationalScalar>(r, "demo/a", {}, [] { return q_int(2); }, [] { return RationalScalar(2); });
  SuiteConfig cfg;
  const nlohmann::json j = report_to_json(r, cfg, true);
  CHECK(j["status"] == "fail");
  CHECK(j["records"][0]["witness"]["lhs"] == "q + q^-1");
  CHECK(j["records"][0]["witness"]["rhs"] == "2");
  CHECK(render_text(j).find("FAIL demo/a") != std::string::npos);
}

TEST_CASE("named matrices") {
  CHECK(matrix_by_name("e1", 2, 1) == pi_generator({UqGenerator::Kind::E, 1}, 2, 1));
  CHECK(matrix_by_name("k1^-1", 2, 2) == EndoMatrix::k_power(1, -2, 2, 2));
  CHECK(matrix_by_name("E1,3", 3, 1) == ehat_matrix(1, 3, 3, 1));
  CHECK(matrix_by_name("t1", 2, 2) == rho_generator(1, 2, 2));
  CHECK_THROWS(matrix_by_name("x1", 2, 1));
  CHECK_THROWS(matrix_by_name("e", 2, 1));
}
