#include "qsw/duality.hpp"

#include <algorithm>

namespace qsw {

std::vector<MultiIndex> monotone_indices(int n, int p) {
  std::vector<MultiIndex> out;
  for (auto& J : all_multiindices(n, p))
    if (std::is_sorted(J.begin(), J.end())) out.push_back(std::move(J));
  return out;
}

OperatorExpr euler_chain(const MultiIndex& J, EulerOrder order) {
  std::vector<int> up(J.begin(), J.end());
  std::vector<int> down(J.rbegin(), J.rend());
  if (order == EulerOrder::Nested) return mul_chain(up) * derivation_chain(down);
  return mul_chain(down) * derivation_chain(up);
}

OperatorExpr euler_operator(int n, int p, EulerOrder order) {
  OperatorExpr sum;
  bool first = true;
  for (const auto& J : monotone_indices(n, p)) {
    OperatorExpr term = multiindex_factorial(J, n).inverse() * euler_chain(J, order);
    sum = first ? term : sum + term;
    first = false;
  }
  return sum;
}

XTensorElement euler_apply(const PlainTensor& x, int n, int p, EulerOrder order) {
  for (const auto& [J, c] : x)
    if (static_cast<int>(J.size()) != p) throw DimensionError("euler_apply: tensor of the wrong degree");
  return euler_operator(n, p, order)(embed_tensor(x, n));
}

OperatorExpr phi_operator(int i, int a) {
  const OperatorExpr diff =
      RationalScalar::q_power(a) * OperatorExpr::k_power(i, 2) - RationalScalar::q_power(-a) * OperatorExpr::k_power(i, -2);
  return RationalScalar::q_minus_qinv().inverse() * diff;
}

OperatorExpr phi_falling(int i, int m) {
  OperatorExpr op;
  for (int a = 0; a < m; ++a) op = op * phi_operator(i, -a);
  return op;
}

namespace {

std::string tag_np(int n, int p) { return "/n=" + std::to_string(n) + ",p=" + std::to_string(p); }

int multiplicity(const MultiIndex& J, int i) {
  return static_cast<int>(std::count(J.begin(), J.end(), static_cast<std::uint8_t>(i)));
}

}  // namespace

Report verify_euler_identity(int n, int p_max) {
  if (n < 1) throw std::invalid_argument("verify_euler_identity: n must be >= 1");
  Report report;
  for (int p = 0; p <= p_max; ++p) {
    const OperatorExpr nested = euler_operator(n, p, EulerOrder::Nested);
    const OperatorExpr reversed = euler_operator(n, p, EulerOrder::Reversed);
    std::size_t reversed_identity = 0, total = 0;
    for (const auto& J : all_multiindices(n, p)) {
      const XTensorElement x = basis_tensor(J, n);
      const nlohmann::json params = {{"n", n}, {"p", p}, {"J", multiindex_to_string(J)}};
      check_equal<XTensorElement>(report, "euler.euler" + tag_np(n, p) + "/" + multiindex_to_string(J), params,
                                  [&] { return nested(x); }, [&] { return x; });
      ++total;
      if (reversed(x) == x) ++reversed_identity;
    }
    // The other chain order is evaluated and reported; a miss is a skip, not a failure.
    CheckRecord rec;
    rec.id = "euler.reversed-order" + tag_np(n, p);
    rec.params = {{"n", n}, {"p", p}};
    rec.status = reversed_identity == total ? CheckStatus::Pass : CheckStatus::Skip;
    rec.note = reversed_identity == total ? "identity on all basis tensors"
                                          : "not the identity on " + std::to_string(total - reversed_identity) +
                                                " of " + std::to_string(total) + " basis tensors";
    report.add(std::move(rec));
    report.artifacts().push_back({{"kind", "euler-order"}, {"n", n}, {"p", p}, {"order", "reversed"},
                                  {"identity", reversed_identity == total},
                                  {"identity_on", reversed_identity}, {"basis_size", total}});
  }
  return report;
}

Report verify_phi_identities(int n, int p_max) {
  if (n < 1) throw std::invalid_argument("verify_phi_identities: n must be >= 1");
  Report report;
  for (int p = 0; p <= p_max; ++p) {
    const std::string tag = tag_np(n, p);
    for (const auto& I : all_multiindices(n, p)) {
      const XTensorElement x = basis_tensor(I, n);
      const std::string key = "/" + multiindex_to_string(I);
      for (int i = 1; i <= n; ++i) {
        const int l = multiplicity(I, i);
        const std::string it = "/i=" + std::to_string(i);
        for (int a = -p - 1; a <= 1; ++a) {
          const nlohmann::json params = {{"n", n}, {"p", p}, {"I", multiindex_to_string(I)}, {"i", i}, {"a", a}};
          const std::string at = it + ",a=" + std::to_string(a);
          check_equal<XTensorElement>(report, "phi.eval" + tag + key + at, params,
                                      [&] { return phi_operator(i, a)(x); },
                                      [&] { return q_int_signed(l + a) * x; });
          if (p >= 1)
            check_equal<XTensorElement>(
                report, "phi.intertwine" + tag + key + at, params,
                [&] { return (phi_operator(i, a) * OperatorExpr::derivation(i))(x); },
                [&] { return (OperatorExpr::derivation(i) * phi_operator(i, a - 1))(x); });
        }
        for (int m = 0; m <= p; ++m) {
          const nlohmann::json params = {{"n", n}, {"p", p}, {"I", multiindex_to_string(I)}, {"i", i}, {"m", m}};
          const std::vector<int> letters(static_cast<std::size_t>(m), i);
          check_equal<XTensorElement>(report, "phi.power" + tag + key + it + ",m=" + std::to_string(m), params,
                                      [&] { return (mul_chain(letters) * derivation_chain(letters))(x); },
                                      [&] { return phi_falling(i, m)(x); });
        }
      }
      for (const auto& J : monotone_indices(n, p)) {
        const nlohmann::json params = {{"n", n}, {"p", p}, {"I", multiindex_to_string(I)}, {"J", multiindex_to_string(J)}};
        const std::string jt = "/J=" + multiindex_to_string(J);
        const XTensorElement lhs = euler_chain(J, EulerOrder::Nested)(x);
        check_equal<XTensorElement>(report, "phi.summand-product" + tag + key + jt, params, [&] { return lhs; },
                                    [&] {
                                      OperatorExpr prod;
                                      for (int i = 1; i <= n; ++i) prod = prod * phi_falling(i, multiplicity(J, i));
                                      return prod(x);
                                    });
        check_equal<XTensorElement>(report, "phi.summand-value" + tag + key + jt, params, [&] { return lhs; },
                                    [&] {
                                      RationalScalar c = 1;
                                      for (int i = 1; i <= n; ++i)
                                        c *= q_falling(multiplicity(I, i), multiplicity(J, i));
                                      return c * x;
                                    });
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

Rational evaluate_q_int(int k, const Rational& v0) { return specialize(q_int(k), v0); }

void require_generic(const Rational& v0, int p, const QIntEvaluator& eval) {
  if (sgn(v0) == 0) throw DegeneracyError(0, "v0 = 0 is not a valid specialization");
  for (int k = 1; k <= p; ++k)
    if (sgn(eval(k, v0)) == 0)
      throw DegeneracyError(k, "[" + std::to_string(k) + "] vanishes at q0 = " + rational_to_string(v0 * v0) +
                                   "; the Hecke algebra is not semisimple there");
}

std::vector<SparseVec> commutant(const std::vector<SparseVec>& mats, std::size_t d) {
  const std::size_t N = d * d;
  std::vector<SparseVec> equations;
  for (const auto& M : mats) {
    // (XM - MX)_{ab} = sum_c M_cb X_ac - M_ac X_cb
    std::vector<std::vector<std::pair<std::size_t, const Rational*>>> by_row(d), by_col(d);
    for (const auto& [k, c] : M) {
      by_row[k / d].emplace_back(k % d, &c);
      by_col[k % d].emplace_back(k / d, &c);
    }
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        SparseVec eq;
        auto add = [&eq](std::size_t idx, const Rational& v) {
          auto [it, inserted] = eq.try_emplace(idx, v);
          if (!inserted) {
            it->second += v;
            if (sgn(it->second) == 0) eq.erase(it);
          }
        };
        for (const auto& [c, m] : by_col[b]) add(a * d + c, *m);
        for (const auto& [c, m] : by_row[a]) add(c * d + b, -*m);
        if (!eq.empty()) equations.push_back(std::move(eq));
      }
  }
  return nullspace(equations, N);
}

EndoMatrix rho_generator(int r, int n, int p) {
  if (r < 1 || r >= p) throw std::out_of_range("rho_generator: need 1 <= r < p");
  return plain_operator_matrix(n, p, [r](const MultiIndex& J) { return t_action(r, PlainTensor{{J, 1}}); });
}

EchelonBasis hecke_image(int n, int p, const Rational& v0, const QIntEvaluator& eval) {
  require_generic(v0, p, eval);
  const std::size_t d = EndoMatrix(n, p).size();
  EchelonBasis basis(d * d);
  for (const auto& w : all_permutations(p)) {
    EndoMatrix m = EndoMatrix::identity(n, p);
    for (int r : w.reduced_word()) m = m * rho_generator(r, n, p);
    basis.insert(m.specialize_flat(v0));
  }
  return basis;
}

nlohmann::json CommutantReport::to_json() const {
  nlohmann::json trace = nlohmann::json::array();
  for (auto t : pi_dimension_trace) trace.push_back(t);
  return {{"kind", "commutant"},
          {"n", n},
          {"p", p},
          {"q0", rational_to_string(q0)},
          {"dims",
           {{"commutant_of_hecke", commutant_of_hecke},
            {"pi_image", pi_image},
            {"hecke_image", hecke_image},
            {"commutant_of_pi", commutant_of_pi}}},
          {"equalities",
           {{"pi_image_in_commutant_of_hecke", pi_in_commutant_of_hecke},
            {"commutant_of_hecke_in_pi_image", commutant_of_hecke_in_pi},
            {"hecke_image_in_commutant_of_pi", hecke_in_commutant_of_pi},
            {"commutant_of_pi_in_hecke_image", commutant_of_pi_in_hecke}}},
          {"pi_dimension_trace", trace},
          {"status", passed() ? "pass" : "fail"}};
}

CommutantReport double_commutant(int n, int p, const Rational& v0, const QIntEvaluator& eval) {
  if (n < 1 || p < 0) throw std::invalid_argument("double_commutant: need n >= 1, p >= 0");
  require_generic(v0, p, eval);
  CommutantReport rep;
  rep.n = n;
  rep.p = p;
  rep.q0 = v0 * v0;
  const std::size_t d = EndoMatrix(n, p).size();
  const std::size_t N = d * d;

  std::vector<SparseVec> rho_gens;
  for (int r = 1; r < p; ++r) rho_gens.push_back(rho_generator(r, n, p).specialize_flat(v0));
  const std::vector<SparseVec> comm_rho = commutant(rho_gens, d);

  const SpanSaturation pi = pi_image(n, p, v0);
  std::vector<SparseVec> pi_gens;
  using K = UqGenerator::Kind;
  for (int i = 1; i <= n; ++i) pi_gens.push_back(pi_generator({K::KHalf, i}, n, p).specialize_flat(v0));
  for (int i = 1; i < n; ++i) {
    pi_gens.push_back(pi_generator({K::E, i}, n, p).specialize_flat(v0));
    pi_gens.push_back(pi_generator({K::F, i}, n, p).specialize_flat(v0));
  }
  const std::vector<SparseVec> comm_pi = commutant(pi_gens, d);
  const EchelonBasis hecke = hecke_image(n, p, v0, eval);

  EchelonBasis comm_rho_basis(N), comm_pi_basis(N);
  for (const auto& v : comm_rho) comm_rho_basis.insert(v);
  for (const auto& v : comm_pi) comm_pi_basis.insert(v);
  auto rows_of = [](const EchelonBasis& b) {
    std::vector<SparseVec> out;
    for (const auto& [k, row] : b.rows()) out.push_back(row);
    return out;
  };

  rep.commutant_of_hecke = comm_rho_basis.rank();
  rep.pi_image = pi.basis.rank();
  rep.hecke_image = hecke.rank();
  rep.commutant_of_pi = comm_pi_basis.rank();
  rep.pi_in_commutant_of_hecke = span_contains(comm_rho_basis, rows_of(pi.basis));
  rep.commutant_of_hecke_in_pi = span_contains(pi.basis, comm_rho);
  rep.hecke_in_commutant_of_pi = span_contains(comm_pi_basis, rows_of(hecke));
  rep.commutant_of_pi_in_hecke = span_contains(hecke, comm_pi);
  rep.pi_dimension_trace = pi.dimension_trace;
  return rep;
}

Report verify_double_commutant(int n, int p, const Rational& v0, const QIntEvaluator& eval) {
  const CommutantReport rep = double_commutant(n, p, v0, eval);
  Report report;
  const std::string tag = tag_np(n, p);
  const nlohmann::json params = {{"n", n}, {"p", p}, {"q0", rational_to_string(rep.q0)}};
  check_true(report, "duality.pi-image-in-commutant-of-hecke" + tag, params, rep.pi_in_commutant_of_hecke);
  check_true(report, "duality.commutant-of-hecke-in-pi-image" + tag, params, rep.commutant_of_hecke_in_pi);
  check_true(report, "duality.hecke-image-in-commutant-of-pi" + tag, params, rep.hecke_in_commutant_of_pi);
  check_true(report, "duality.commutant-of-pi-in-hecke-image" + tag, params, rep.commutant_of_pi_in_hecke);
  check_true(report, "duality.dims-consistent" + tag, params,
             rep.commutant_of_hecke == rep.pi_image && rep.commutant_of_pi == rep.hecke_image,
             "commutant_of_hecke " + std::to_string(rep.commutant_of_hecke) + ", pi_image " +
                 std::to_string(rep.pi_image) + ", hecke_image " + std::to_string(rep.hecke_image) +
                 ", commutant_of_pi " + std::to_string(rep.commutant_of_pi));
  report.artifacts().push_back(rep.to_json());
  return report;
}

}  // namespace qsw
