#include "qsw/qsw.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qsw/parse.hpp"
#include "qsw/suites.hpp"

struct qsw_element {
  qsw::XTensorElement value;
};

struct qsw_report {
  nlohmann::json json;
  std::size_t failed;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qsw_status fail(qsw_status code, const std::string& msg) {
  last_error = msg;
  return code;
}

// Runs f and maps exceptions to status codes. Order matters: the specific
// types derive from std::invalid_argument or std::domain_error.
template <typename F>
qsw_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return QSW_OK;
  } catch (const qsw::ParseError& e) {
    return fail(QSW_PARSE, e.what());
  } catch (const qsw::DimensionError& e) {
    return fail(QSW_DIMENSION, e.what());
  } catch (const qsw::ConfigError& e) {
    return fail(QSW_CONFIG, e.what());
  } catch (const qsw::DegeneracyError& e) {
    return fail(QSW_DEGENERATE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QSW_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(QSW_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(QSW_INTERNAL, e.what());
  } catch (...) {
    return fail(QSW_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* qsw_version(void) { return QSW_VERSION; }

const char* qsw_last_error(void) { return last_error.c_str(); }

void qsw_suite_config_init(qsw_suite_config* cfg) {
  if (!cfg) return;
  cfg->suite = "all";
  cfg->n = 2;
  cfg->p_max = 2;
  cfg->q0 = nullptr;
  cfg->symbolic = 0;
  cfg->seed = qsw::kDefaultSeed;
  cfg->samples = 100;
  cfg->reproducible = 0;
}

qsw_status qsw_element_parse(const char* text, int n, qsw_element** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    if (n < 1) throw qsw::DimensionError("n must be positive");
    *out = new qsw_element{qsw::parse_element(text, n)};
  });
}

qsw_status qsw_element_to_string(const qsw_element* x, char** out) {
  return guarded([&] {
    require(x, "element");
    require(out, "out");
    *out = dup(x->value.to_string());
  });
}

qsw_status qsw_element_product(const qsw_element* a, const qsw_element* b, qsw_element** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (a->value.dim() != b->value.dim()) throw qsw::DimensionError("elements live over different n");
    *out = new qsw_element{qsw::product(a->value, b->value)};
  });
}

qsw_status qsw_element_equal(const qsw_element* a, const qsw_element* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->value == b->value ? 1 : 0;
  });
}

void qsw_element_free(qsw_element* x) { delete x; }

qsw_status qsw_eval(const char* text, int n, char** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    if (n < 1) throw qsw::DimensionError("n must be positive");
    *out = dup(qsw::eval_expression(text, n));
  });
}

qsw_status qsw_run_suite(const qsw_suite_config* cfg, qsw_report** out) {
  return guarded([&] {
    require(cfg, "config");
    require(out, "out");
    qsw::SuiteConfig sc;
    sc.suite = cfg->suite ? cfg->suite : "all";
    sc.n = cfg->n;
    sc.p_max = cfg->p_max;
    if (cfg->symbolic)
      sc.q0.reset();
    else if (cfg->q0)
      sc.q0 = qsw::parse_q0(cfg->q0);
    sc.seed = cfg->seed;
    sc.samples = cfg->samples;
    const qsw::Report rep = qsw::run_suite(sc);
    *out = new qsw_report{qsw::report_to_json(rep, sc, cfg->reproducible != 0), rep.count(qsw::CheckStatus::Fail)};
  });
}

qsw_status qsw_report_render(const qsw_report* r, qsw_format format, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    switch (format) {
      case QSW_FORMAT_JSON: *out = dup(r->json.dump(2) + "\n"); break;
      case QSW_FORMAT_TEXT: *out = dup(qsw::render_text(r->json)); break;
      default: throw std::invalid_argument("unknown format");
    }
  });
}

int qsw_report_failed(const qsw_report* r) { return r ? static_cast<int>(r->failed) : -1; }

void qsw_report_free(qsw_report* r) { delete r; }

qsw_status qsw_matrix_json(const char* name, int n, int p, char** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    if (n < 1 || n > 6) throw qsw::DimensionError("n must be in 1..6");
    if (p < 0 || p > 6) throw qsw::DimensionError("p must be in 0..6");
    nlohmann::json j = qsw::matrix_by_name(name, n, p).to_json();
    j["name"] = name;
    *out = dup(j.dump(2) + "\n");
  });
}

void qsw_string_free(char* s) { std::free(s); }

}  // extern "C"
