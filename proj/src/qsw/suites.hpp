#pragma once

// Named verification suites and their reports.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsw/duality.hpp"

namespace qsw {

/// Invalid suite configuration; the CLI maps it to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultSeed = 12345;
/// q0 = 16/9, v0 = 4/3.
Rational default_q0();

/// Accepts "num/den" or an integer; q0 must be the square of a positive rational.
Rational parse_q0(const std::string& text);
/// Positive rational square root; throws ConfigError if q0 is not a square.
Rational sqrt_q0(const Rational& q0);

const std::vector<std::string>& suite_ids();

struct SuiteConfig {
  std::string suite = "all";
  int n = 2;
  int p_max = 2;
  std::optional<Rational> q0 = default_q0();  // empty in symbolic mode
  std::uint64_t seed = kDefaultSeed;
  int samples = 100;
  int k_max = 2;
};

/// Throws ConfigError on invalid ranges, unknown suites, symbolic mode for
/// a specialization suite, and DegeneracyError for a degenerate q0.
Report run_suite(const SuiteConfig& cfg);

Report verify_scalars(int samples, std::uint64_t seed, const Rational& v0);
Report verify_hecke(int samples, std::uint64_t seed);
Report verify_xtensor(int samples, std::uint64_t seed);
Report verify_derivations(int n, int p_max, int samples, std::uint64_t seed);

/// Schema 1 report. `reproducible` drops the timestamp and wall times.
nlohmann::json report_to_json(const Report& report, const SuiteConfig& cfg, bool reproducible);
/// Human-readable summary computed from the JSON form.
std::string render_text(const nlohmann::json& report);

/// Matrix by name: e<i>, f<i>, k<i>, k<i>^-1, t<r> (Hecke action), E<i>,<j>, L<i>,<j>.
EndoMatrix matrix_by_name(const std::string& name, int n, int p);

}  // namespace qsw
