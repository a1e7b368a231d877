#include "qsw/suites.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qsw/parse.hpp"

namespace qsw {

Rational default_q0() { return Rational(16, 9); }

Rational parse_q0(const std::string& text) {
  Rational q;
  try {
    if (text.empty()) throw std::invalid_argument("empty");
    for (char c : text)
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
        throw std::invalid_argument("bad character");
    q = Rational(text[0] == '+' ? text.substr(1) : text);
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
  } catch (const std::exception&) {
    throw ConfigError("q0 must be written as <num>/<den> or <int>, got '" + text + "'");
  }
  sqrt_q0(q);
  return q;
}

Rational sqrt_q0(const Rational& q0) {
  if (sgn(q0) <= 0)
    throw ConfigError("q0 = " + rational_to_string(q0) + " has no positive rational square root v0");
  const Integer a = sqrt(Integer(q0.get_num())), b = sqrt(Integer(q0.get_den()));
  if (a * a != q0.get_num() || b * b != q0.get_den())
    throw ConfigError("q0 = " + rational_to_string(q0) + " is not the square of a rational; v0 = q0^(1/2) must be exact");
  return Rational(a, b);
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"scalars", "hecke",   "xtensor", "derivations", "thm4",
                                               "uq-relations", "thm5-3", "prop5-4", "prop5-5", "euler",
                                               "phi", "duality", "all"};
  return ids;
}

// ---------------------------------------------------------------------------

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int uniform(int lo, int hi) { return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::size_t index(std::size_t size) { return static_cast<std::size_t>(gen() % size); }
};

LaurentPoly random_poly(Rng& rng, bool nonzero) {
  while (true) {
    LaurentPoly p;
    const int terms = rng.uniform(1, 3);
    for (int k = 0; k < terms; ++k) p += LaurentPoly::monomial(rng.uniform(-3, 3), rng.uniform(-3, 3));
    if (!nonzero || !p.is_zero()) return p;
  }
}

RationalScalar random_scalar(Rng& rng) {
  if (rng.uniform(0, 2) == 0) return RationalScalar(random_poly(rng, false));
  return RationalScalar(random_poly(rng, false), random_poly(rng, true));
}

HeckeElement random_hecke(Rng& rng, int m) {
  const auto perms = all_permutations(m);
  HeckeElement h;
  const int terms = rng.uniform(1, 3);
  for (int k = 0; k < terms; ++k) h.add_term(perms[rng.index(perms.size())], RationalScalar(random_poly(rng, true)));
  return h;
}

XTensorElement random_homogeneous(Rng& rng, int n, int p) {
  const auto slice = basis_slice(n, p);
  XTensorElement x(n);
  const int terms = rng.uniform(1, 2);
  for (int k = 0; k < terms; ++k) {
    const auto& key = slice[rng.index(slice.size())];
    x.add_raw(key.w, key.J, RationalScalar(random_poly(rng, true)));
  }
  return x;
}

std::string tag_of(int n, int p) { return "/n=" + std::to_string(n) + ",p=" + std::to_string(p); }

}  // namespace

Report verify_scalars(int samples, std::uint64_t seed, const Rational& v0) {
  Report report;
  const RationalScalar q = RationalScalar::q(), qi = RationalScalar::q_power(-1);
  check_equal<RationalScalar>(report, "scalar.q-int/k=3", {{"k", 3}}, [] { return q_int(3); },
                              [&] { return q * q + 1 + qi * qi; });
  check_equal<RationalScalar>(report, "scalar.q-factorial/k=2", {{"k", 2}}, [] { return q_factorial(2); },
                              [&] { return q + qi; });
  for (int k = 0; k <= 10; ++k)
    check_equal<RationalScalar>(report, "scalar.q-int-identity/k=" + std::to_string(k), {{"k", k}},
                                [&] { return q_int(k) * RationalScalar::q_minus_qinv(); },
                                [&] { return RationalScalar::q_power(k) - RationalScalar::q_power(-k); });
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const RationalScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    const nlohmann::json params = {{"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}};
    const std::string id = "/" + std::to_string(s);
    check_equal<RationalScalar>(report, "scalar.add-associative" + id, params, [&] { return (a + b) + c; },
                                [&] { return a + (b + c); });
    check_equal<RationalScalar>(report, "scalar.mul-associative" + id, params, [&] { return (a * b) * c; },
                                [&] { return a * (b * c); });
    check_equal<RationalScalar>(report, "scalar.mul-commutative" + id, params, [&] { return a * b; },
                                [&] { return b * a; });
    check_equal<RationalScalar>(report, "scalar.distributive" + id, params, [&] { return a * (b + c); },
                                [&] { return a * b + a * c; });
    check_equal<RationalScalar>(report, "scalar.canonical-idempotent" + id, params, [&] { return a.normalized(); },
                                [&] { return a; });
    if (!a.is_zero())
      check_equal<RationalScalar>(report, "scalar.inverse" + id, params, [&] { return a * a.inverse(); },
                                  [] { return RationalScalar(1); });
    check_equal<RationalScalar>(report, "scalar.parse-roundtrip" + id, params,
                                [&] { return RationalScalar::parse(a.to_string()); }, [&] { return a; });
    try {
      const Rational lhs = specialize(a * b + c, v0);
      const Rational rhs = specialize(a, v0) * specialize(b, v0) + specialize(c, v0);
      check_true(report, "scalar.specialize-homomorphism" + id, params, lhs == rhs,
                 rational_to_string(lhs) + " vs " + rational_to_string(rhs));
    } catch (const PoleError&) {
      CheckRecord rec;
      rec.id = "scalar.specialize-homomorphism" + id;
      rec.params = params;
      rec.status = CheckStatus::Skip;
      rec.note = "pole at v0";
      report.add(std::move(rec));
    }
  }
  return report;
}

Report verify_hecke(int samples, std::uint64_t seed) {
  Report report;
  const RationalScalar h = RationalScalar::q_minus_qinv();
  auto t = [](int r) { return HeckeElement::generator(r); };
  for (int r = 1; r <= 4; ++r) {
    const std::string id = "/r=" + std::to_string(r);
    check_equal<HeckeElement>(report, "hecke.quadratic" + id, {{"r", r}}, [&] { return t(r) * t(r); },
                              [&] { return HeckeElement::identity() + h * t(r); });
    check_equal<HeckeElement>(report, "hecke.inverse-left" + id, {{"r", r}},
                              [&] { return HeckeElement::generator_inverse(r) * t(r); },
                              [] { return HeckeElement::identity(); });
    check_equal<HeckeElement>(report, "hecke.inverse-right" + id, {{"r", r}},
                              [&] { return t(r) * HeckeElement::generator_inverse(r); },
                              [] { return HeckeElement::identity(); });
    if (r + 1 <= 4)
      check_equal<HeckeElement>(report, "hecke.braid" + id, {{"r", r}}, [&] { return t(r) * t(r + 1) * t(r); },
                                [&] { return t(r + 1) * t(r) * t(r + 1); });
    for (int s = r + 2; s <= 4; ++s)
      check_equal<HeckeElement>(report, "hecke.commute/r=" + std::to_string(r) + ",s=" + std::to_string(s),
                                {{"r", r}, {"s", s}}, [&] { return t(r) * t(s); }, [&] { return t(s) * t(r); });
  }
  // Products of generators of H_p span p! basis elements, independent at a generic point.
  for (int p = 1; p <= 4; ++p) {
    std::set<Permutation> support;
    std::vector<HeckeElement> products = {HeckeElement::identity()}, frontier = products;
    for (int len = 1; len <= p * (p - 1) / 2; ++len) {
      std::vector<HeckeElement> next;
      for (const auto& x : frontier)
        for (int r = 1; r < p; ++r) next.push_back(t(r) * x);
      products.insert(products.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    bool inside = true;
    for (const auto& x : products)
      for (const auto& [w, c] : x.terms()) {
        support.insert(w);
        inside = inside && w.support() <= p;
      }
    std::map<Permutation, std::size_t> column;
    for (const auto& w : support) column.emplace(w, column.size());
    EchelonBasis basis(column.size());
    for (const auto& x : products) {
      SparseVec v;
      for (const auto& [w, c] : x.terms()) {
        Rational val = specialize(c, Rational(4, 3));
        if (sgn(val) != 0) v.emplace(column[w], val);
      }
      basis.insert(v);
    }
    std::size_t fact = 1;
    for (int k = 2; k <= p; ++k) fact *= static_cast<std::size_t>(k);
    check_true(report, "hecke.basis-count/p=" + std::to_string(p), {{"p", p}},
               inside && support.size() == fact && basis.rank() == fact,
               "support " + std::to_string(support.size()) + ", rank " + std::to_string(basis.rank()));
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const HeckeElement a = random_hecke(rng, 4), b = random_hecke(rng, 4), c = random_hecke(rng, 4);
    const nlohmann::json params = {{"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}};
    check_equal<HeckeElement>(report, "hecke.associative/" + std::to_string(s), params, [&] { return (a * b) * c; },
                              [&] { return a * (b * c); });
    const int k = rng.uniform(0, 3);
    check_equal<HeckeElement>(report, "hecke.alpha-homomorphism/" + std::to_string(s), params,
                              [&] { return alpha_shift(a * b, k); },
                              [&] { return alpha_shift(a, k) * alpha_shift(b, k); });
  }
  return report;
}

Report verify_xtensor(int samples, std::uint64_t seed) {
  Report report;
  const int n = 2;
  for (int p = 2; p <= 3; ++p) {
    for (const auto& u : all_permutations(4)) {
      for (const auto& J : all_multiindices(n, p)) {
        check_equal<XTensorElement>(report,
                                    "xtensor.confluence/p=" + std::to_string(p) + "/" + u.to_string() +
                                        multiindex_to_string(J),
                                    {{"p", p}, {"u", u.to_string()}, {"J", multiindex_to_string(J)}},
                                    [&] {
                                      XTensorElement x(n);
                                      x.add_raw(u, J, 1, ReductionStrategy::SmallestDescent);
                                      return x;
                                    },
                                    [&] {
                                      XTensorElement x(n);
                                      x.add_raw(u, J, 1, ReductionStrategy::LargestDescent);
                                      return x;
                                    });
      }
    }
  }
  // t_r satisfies the Hecke relations on V^{(x)3}.
  for (int dim = 1; dim <= 3; ++dim) {
    for (const auto& J : all_multiindices(dim, 3)) {
      const PlainTensor x{{J, 1}};
      const std::string id = "/n=" + std::to_string(dim) + "/" + multiindex_to_string(J);
      const nlohmann::json params = {{"n", dim}, {"J", multiindex_to_string(J)}};
      for (int r = 1; r <= 2; ++r) {
        // (t - q)(t + q^{-1}) = 0, i.e. t^2 = 1 + (q - q^{-1}) t.
        check_true(report, "xtensor.t-quadratic/r=" + std::to_string(r) + id, params, [&] {
          PlainTensor lhs = t_action(r, t_action(r, x));
          PlainTensor rhs = x;
          for (const auto& [K, c] : t_action(r, x)) add_plain(rhs, K, RationalScalar::q_minus_qinv() * c);
          return lhs == rhs;
        }());
        check_true(report, "xtensor.t-inverse/r=" + std::to_string(r) + id, params,
                   t_action(r, t_action_inverse(r, x)) == x && t_action_inverse(r, t_action(r, x)) == x);
      }
      check_true(report, "xtensor.t-braid" + id, params,
                 t_action(1, t_action(2, t_action(1, x))) == t_action(2, t_action(1, t_action(2, x))));
    }
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const XTensorElement a = random_homogeneous(rng, n, rng.uniform(0, 2));
    const XTensorElement b = random_homogeneous(rng, n, rng.uniform(0, 2));
    const XTensorElement c = random_homogeneous(rng, n, rng.uniform(0, 2));
    const nlohmann::json params = {{"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}};
    const std::string id = "/" + std::to_string(s);
    check_equal<XTensorElement>(report, "xtensor.product-associative" + id, params,
                                [&] { return product(product(a, b), c); }, [&] { return product(a, product(b, c)); });
    check_true(report, "xtensor.grading" + id, params,
               product(a, b).homogeneous_degree() == a.homogeneous_degree() + b.homogeneous_degree() ||
                   product(a, b).is_zero());
    const HeckeElement h1 = random_hecke(rng, 4), h2 = random_hecke(rng, 4);
    check_equal<XTensorElement>(report, "xtensor.left-action" + id, params,
                                [&] { return left_hecke(h1 * h2, a); },
                                [&] { return left_hecke(h1, left_hecke(h2, a)); });
    check_equal<XTensorElement>(report, "xtensor.parse-roundtrip" + id, params,
                                [&] { return parse_element(a.to_string(), n); }, [&] { return a; });
  }
  return report;
}

Report verify_derivations(int n, int p_max, int samples, std::uint64_t seed) {
  Report report;
  if (n >= 2)
    check_equal<XTensorElement>(report, "derivation.example/e[1,1,2]", {{"i", 1}, {"J", "e[1,1,2]"}},
                                [&] { return apply_derivation(1, basis_tensor({1, 1, 2}, n)); },
                                [&] { return raw_derivation(1, {1, 1, 2}, n); });
  for (int p = 0; p <= p_max; ++p)
    for (const auto& J : all_multiindices(n, p))
      for (int i = 1; i <= n; ++i)
        check_equal<XTensorElement>(
            report, "derivation.closed-form" + tag_of(n, p) + "/" + multiindex_to_string(J) + "/i=" + std::to_string(i),
            {{"n", n}, {"p", p}, {"J", multiindex_to_string(J)}, {"i", i}},
            [&] { return derivation_closed_form(i, J, n); }, [&] { return raw_derivation(i, J, n); });
  report.merge(verify_derivation_equivariance(n, p_max, samples, seed));
  return report;
}

// ---------------------------------------------------------------------------

namespace {

void validate(const SuiteConfig& cfg) {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), cfg.suite) == ids.end()) throw ConfigError("unknown suite '" + cfg.suite + "'");
  if (cfg.n < 1 || cfg.n > 6) throw ConfigError("n must be in 1..6");
  if (cfg.p_max < 0 || cfg.p_max > 6) throw ConfigError("p_max must be in 0..6");
  if (cfg.samples < 0 || cfg.samples > 100000) throw ConfigError("samples must be in 0..100000");
  if (cfg.k_max < 0 || cfg.k_max > 4) throw ConfigError("k_max must be in 0..4");
  if (cfg.q0) sqrt_q0(*cfg.q0);
}

bool needs_q0(const std::string& suite) { return suite == "prop5-5" || suite == "duality"; }

void skip_record(Report& report, const std::string& id, const std::string& note) {
  CheckRecord rec;
  rec.id = id;
  rec.status = CheckStatus::Skip;
  rec.note = note;
  report.add(std::move(rec));
}

}  // namespace

Report run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  if (needs_q0(cfg.suite) && !cfg.q0)
    throw ConfigError("suite '" + cfg.suite + "' computes at a specialization q = q0 and cannot run in symbolic mode");
  const Rational v0 = cfg.q0 ? sqrt_q0(*cfg.q0) : sqrt_q0(default_q0());
  const int n = cfg.n, pm = cfg.p_max;
  const bool all = cfg.suite == "all";
  auto want = [&](const char* id) { return all || cfg.suite == id; };

  if (cfg.q0 && (want("prop5-5") || want("duality"))) require_generic(v0, pm);

  Report report;
  if (want("scalars")) report.merge(verify_scalars(cfg.samples, cfg.seed, v0));
  if (want("hecke")) report.merge(verify_hecke(cfg.samples, cfg.seed));
  if (want("xtensor")) report.merge(verify_xtensor(cfg.samples, cfg.seed));
  if (want("derivations")) report.merge(verify_derivations(n, pm, cfg.samples, cfg.seed));
  if (want("thm4")) {
    report.merge(verify_commutation_relations(n, pm));
    report.merge(verify_k_relations(n, pm));
  }
  if (want("uq-relations"))
    for (int p = 0; p <= pm; ++p) report.merge(verify_uq_relations(n, p));
  if (want("thm5-3"))
    for (int p = 1; p <= pm; ++p) report.merge(verify_l_operators(n, p));
  if (want("prop5-4")) report.merge(verify_triple_relations(n, pm));
  if (want("euler")) report.merge(verify_euler_identity(n, pm));
  if (want("phi")) report.merge(verify_phi_identities(n, pm));
  if (want("prop5-5") || want("duality")) {
    if (!cfg.q0) {
      skip_record(report, "membership", "symbolic mode: needs a specialization q0");
      skip_record(report, "duality", "symbolic mode: needs a specialization q0");
    } else {
      if (want("prop5-5"))
        for (int p = 1; p <= pm; ++p) {
          ChainMembershipConfig pc;
          pc.n = n;
          pc.p = p;
          pc.k_max = cfg.k_max;
          pc.samples = cfg.samples;
          pc.v0 = v0;
          pc.seed = cfg.seed + static_cast<std::uint64_t>(p);
          report.merge(verify_chain_membership(pc));
        }
      if (want("duality"))
        for (int p = 1; p <= pm; ++p) report.merge(verify_double_commutant(n, p, v0));
    }
  }
  report.sort();
  return report;
}

// ---------------------------------------------------------------------------

nlohmann::json report_to_json(const Report& report, const SuiteConfig& cfg, bool reproducible) {
  nlohmann::json j;
  j["schema"] = 1;
  j["tool"] = "qsw";
  j["version"] = QSW_VERSION;
  if (!reproducible) {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
  }
  j["config"] = {{"suite", cfg.suite},
                 {"n", cfg.n},
                 {"p_max", cfg.p_max},
                 {"q0", cfg.q0 ? nlohmann::json(rational_to_string(*cfg.q0)) : nlohmann::json(nullptr)},
                 {"symbolic", !cfg.q0.has_value()},
                 {"seed", cfg.seed},
                 {"samples", cfg.samples},
                 {"k_max", cfg.k_max}};
  const std::size_t pass = report.count(CheckStatus::Pass), fail = report.count(CheckStatus::Fail),
                    skip = report.count(CheckStatus::Skip);
  j["summary"] = {{"total", report.records().size()}, {"passed", pass}, {"failed", fail}, {"skipped", skip}};
  j["status"] = fail == 0 ? "pass" : "fail";
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records()) {
    nlohmann::json rec = {{"id", r.id}, {"params", r.params}, {"status", status_name(r.status)}};
    if (r.status == CheckStatus::Fail && (!r.lhs.empty() || !r.rhs.empty()))
      rec["witness"] = {{"lhs", r.lhs}, {"rhs", r.rhs}};
    if (!r.note.empty()) rec["note"] = r.note;
    if (!reproducible) rec["wall_ms"] = r.wall_ms;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  j["artifacts"] = report.artifacts();
  return j;
}

std::string render_text(const nlohmann::json& j) {
  std::ostringstream out;
  const auto& cfg = j.at("config");
  out << j.at("tool").get<std::string>() << " " << j.at("version").get<std::string>() << "  suite "
      << cfg.at("suite").get<std::string>() << "  n " << cfg.at("n") << "  p_max " << cfg.at("p_max") << "  q0 "
      << (cfg.at("q0").is_null() ? std::string("symbolic") : cfg.at("q0").get<std::string>()) << "  seed "
      << cfg.at("seed") << "\n";
  struct Tally {
    std::size_t pass = 0, fail = 0, skip = 0;
  };
  std::map<std::string, Tally> groups;
  for (const auto& r : j.at("records")) {
    const std::string id = r.at("id");
    Tally& t = groups[id.substr(0, id.find('/'))];
    const std::string st = r.at("status");
    (st == "pass" ? t.pass : st == "fail" ? t.fail : t.skip)++;
  }
  for (const auto& [g, t] : groups) {
    out << "  " << g << ": " << t.pass << "/" << (t.pass + t.fail + t.skip) << " pass";
    if (t.fail) out << ", " << t.fail << " fail";
    if (t.skip) out << ", " << t.skip << " skip";
    out << "\n";
  }
  for (const auto& r : j.at("records")) {
    if (r.at("status") == "pass") continue;
    out << (r.at("status") == "fail" ? "FAIL " : "note ") << r.at("id").get<std::string>() << "\n";
    if (r.contains("witness")) {
      out << "    lhs: " << r["witness"]["lhs"].get<std::string>() << "\n";
      out << "    rhs: " << r["witness"]["rhs"].get<std::string>() << "\n";
    }
    if (r.contains("note")) out << "    " << r["note"].get<std::string>() << "\n";
  }
  for (const auto& a : j.at("artifacts"))
    if (a.value("kind", "") == "commutant")
      out << "  commutant n=" << a["n"] << " p=" << a["p"] << ": commutant_of_hecke "
          << a["dims"]["commutant_of_hecke"] << ", pi_image " << a["dims"]["pi_image"] << ", hecke_image "
          << a["dims"]["hecke_image"] << ", commutant_of_pi " << a["dims"]["commutant_of_pi"] << " ("
          << a["status"].get<std::string>() << ")\n";
  const auto& s = j.at("summary");
  out << "result: " << (j.at("status") == "pass" ? "PASS" : "FAIL") << " (" << s.at("passed") << " passed, "
      << s.at("failed") << " failed, " << s.at("skipped") << " skipped)\n";
  return out.str();
}

EndoMatrix matrix_by_name(const std::string& name, int n, int p) {
  auto number = [&](std::size_t from, std::size_t to) {
    const std::string digits = name.substr(from, to - from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad matrix name '" + name + "'");
    return std::stoi(digits);
  };
  if (name.empty()) throw std::invalid_argument("empty matrix name");
  using K = UqGenerator::Kind;
  const char c = name[0];
  if (c == 'e') return pi_generator({K::E, number(1, name.size())}, n, p);
  if (c == 'f') return pi_generator({K::F, number(1, name.size())}, n, p);
  if (c == 't') return rho_generator(number(1, name.size()), n, p);
  if (c == 'k') {
    const auto caret = name.find('^');
    if (caret == std::string::npos) return EndoMatrix::k_power(number(1, name.size()), 2, n, p);
    const std::string ex = name.substr(caret + 1);
    const int i = number(1, caret);
    if (ex == "-1") return EndoMatrix::k_power(i, -2, n, p);
    if (ex == "(1/2)") return EndoMatrix::k_power(i, 1, n, p);
    if (ex == "(-1/2)") return EndoMatrix::k_power(i, -1, n, p);
    throw std::invalid_argument("bad matrix name '" + name + "'");
  }
  if (c == 'E' || c == 'L') {
    const auto comma = name.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected E<i>,<j> or L<i>,<j>");
    const int i = number(1, comma), j = number(comma + 1, name.size());
    return c == 'E' ? ehat_matrix(i, j, n, p) : l_operator(i, j, 1, n, p);
  }
  throw std::invalid_argument("unknown matrix name '" + name + "'");
}

}  // namespace qsw
