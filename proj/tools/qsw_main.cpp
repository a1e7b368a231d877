// qsw: command-line front end over the C API.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 invalid input
// (configuration, degenerate q0, unparsable expression), 3 internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "qsw/qsw.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { qsw_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int error_exit(qsw_status st) {
  std::cerr << "qsw: " << qsw_last_error() << "\n";
  return st == QSW_INTERNAL ? 3 : 2;
}

bool emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(path);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks identities of the quantum Schur-Weyl construction"};
  app.set_version_flag("--version", std::string(qsw_version()));

  std::string suite = "all", format = "json", out_path, q_text, eval_text, matrix_name;
  int n = 2, p_max = 2, samples = 100, p = 2;
  uint64_t seed = 12345;
  bool symbolic = false, reproducible = false;

  app.add_option("--suite", suite, "Suite id or 'all'");
  app.add_option("--n", n, "Rank of gl_n")->check(CLI::Range(1, 6));
  app.add_option("--p-max", p_max, "Largest tensor degree")->check(CLI::Range(0, 6));
  auto* q_opt = app.add_option("--q", q_text, "Specialization q0 = num/den, a rational square (default 16/9, or $QSW_Q0)");
  auto* sym = app.add_flag("--symbolic", symbolic, "Stay over Q(v); suites needing q0 are skipped");
  q_opt->excludes(sym);
  app.add_option("--seed", seed, "Seed for sampled checks");
  app.add_option("--samples", samples, "Samples per randomized check")->check(CLI::Range(0, 100000));
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write the report to a file");
  app.add_flag("--reproducible", reproducible, "Omit timestamps and timings");
  auto* eval = app.add_option("--eval", eval_text, "Evaluate an expression and print its normal form");
  auto* matrix = app.add_option("--matrix", matrix_name, "Print an operator matrix on V^(x)p as JSON");
  app.add_option("--p", p, "Tensor degree for --matrix")->check(CLI::Range(0, 6));
  eval->excludes(matrix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!eval_text.empty()) {
    char* raw = nullptr;
    const qsw_status st = qsw_eval(eval_text.c_str(), n, &raw);
    if (st != QSW_OK) return error_exit(st);
    OwnedString s(raw);
    return emit(std::string(s.get()) + "\n", out_path) ? 0 : 3;
  }

  if (!matrix_name.empty()) {
    char* raw = nullptr;
    const qsw_status st = qsw_matrix_json(matrix_name.c_str(), n, p, &raw);
    if (st != QSW_OK) return error_exit(st);
    OwnedString s(raw);
    return emit(s.get(), out_path) ? 0 : 3;
  }

  if (q_text.empty() && !symbolic)
    if (const char* env = std::getenv("QSW_Q0"); env && *env) q_text = env;

  qsw_suite_config cfg;
  qsw_suite_config_init(&cfg);
  cfg.suite = suite.c_str();
  cfg.n = n;
  cfg.p_max = p_max;
  cfg.q0 = q_text.empty() ? nullptr : q_text.c_str();
  cfg.symbolic = symbolic ? 1 : 0;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.reproducible = reproducible ? 1 : 0;

  qsw_report* report = nullptr;
  if (const qsw_status st = qsw_run_suite(&cfg, &report); st != QSW_OK) return error_exit(st);
  std::unique_ptr<qsw_report, void (*)(qsw_report*)> owned(report, qsw_report_free);

  char* raw = nullptr;
  if (const qsw_status st = qsw_report_render(report, format == "text" ? QSW_FORMAT_TEXT : QSW_FORMAT_JSON, &raw);
      st != QSW_OK)
    return error_exit(st);
  OwnedString text(raw);
  if (!emit(text.get(), out_path)) {
    std::cerr << "qsw: cannot write " << out_path << "\n";
    return 3;
  }
  return qsw_report_failed(report) == 0 ? 0 : 1;
}
