#include <doctest.h>

#include "oracles.hpp"
#include "qsw/duality.hpp"

using namespace qsw;

namespace {

const Rational v0(4, 3);

PlainTensor e(const MultiIndex& J) { return {{J, 1}}; }

SparseVec flat(const EndoMatrix& m) { return m.specialize_flat(v0); }

}  // namespace

TEST_CASE("monotone indices") {
  // binomial(n + p - 1, p)
  CHECK(monotone_indices(2, 3).size() == 4);
  CHECK(monotone_indices(3, 3).size() == 10);
  CHECK(monotone_indices(3, 0).size() == 1);
  for (const auto& J : monotone_indices(3, 3)) CHECK(std::is_sorted(J.begin(), J.end()));
}

TEST_CASE("Euler operator is the identity") {
  CHECK(euler_apply(e({2}), 2, 1) == basis_tensor({2}, 2));
  CHECK(euler_apply(e({1, 1, 2}), 2, 3) == basis_tensor({1, 1, 2}, 2));
  CHECK(euler_apply(PlainTensor{{{}, 1}}, 2, 0) == embed_hecke(HeckeElement::identity(), 2));
  for (const auto& J : all_multiindices(3, 3)) {
    CHECK(euler_apply(e(J), 3, 3, EulerOrder::Nested) == basis_tensor(J, 3));
    CHECK(euler_apply(e(J), 3, 3, EulerOrder::Reversed) == basis_tensor(J, 3));
  }
  CHECK(verify_euler_identity(2, 2).passed());
}

TEST_CASE("Phi operators") {
  CHECK(phi_operator(1, 0)(basis_tensor({1}, 2)) == basis_tensor({1}, 2));
  CHECK(phi_operator(1, 0)(basis_tensor({2}, 2)).is_zero());
  CHECK(phi_operator(1, -1)(basis_tensor({1, 1}, 2)) == basis_tensor({1, 1}, 2));
  CHECK(phi_operator(2, 1)(basis_tensor({2, 1, 2}, 2)) == q_int(3) * basis_tensor({2, 1, 2}, 2));
  CHECK(phi_falling(1, 0)(basis_tensor({1}, 2)) == basis_tensor({1}, 2));
  using O = OperatorExpr;
  for (const auto& J : all_multiindices(2, 2)) {
    const XTensorElement x = basis_tensor(J, 2);
    CHECK((O::mul_vector(1) * O::derivation(1))(x) == phi_operator(1, 0)(x));
  }
  CHECK(verify_phi_identities(2, 2).passed());
}

TEST_CASE("commutant") {
  const std::size_t d = 4;
  CHECK(commutant({flat(EndoMatrix::identity(2, 2))}, d).size() == 16);
  // rho(t_1) on (C^2)^{(x)2}: eigenvalues q (x3) and -q^{-1} (x1), so 3^2 + 1^2.
  const auto c = commutant({flat(rho_generator(1, 2, 2))}, d);
  CHECK(c.size() == 10);
  // Full matrix algebra: only scalars.
  std::vector<SparseVec> units;
  for (std::size_t k = 0; k < d * d; ++k) units.push_back({{k, 1}});
  CHECK(commutant(units, d).size() == 1);
}

TEST_CASE("commutant elements commute with the inputs") {
  const EndoMatrix t1 = rho_generator(1, 2, 3), t2 = rho_generator(2, 2, 3);
  const std::size_t d = t1.size();
  const auto basis = commutant({flat(t1), flat(t2)}, d);
  for (const auto& x : basis) {
    // Residual X M - M X for each input, computed densely.
    for (const EndoMatrix* m : {&t1, &t2}) {
      const SparseVec mf = flat(*m);
      auto get = [&](const SparseVec& v, std::size_t r, std::size_t c) {
        auto it = v.find(r * d + c);
        return it == v.end() ? Rational(0) : it->second;
      };
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          Rational s = 0;
          for (std::size_t k = 0; k < d; ++k) s += get(x, a, k) * get(mf, k, b) - get(mf, a, k) * get(x, k, b);
          CHECK(s == 0);
        }
    }
  }
}

TEST_CASE("Hecke image") {
  CHECK(hecke_image(2, 1, v0).rank() == 1);
  CHECK(hecke_image(2, 2, v0).rank() == 2);
  CHECK(hecke_image(2, 3, v0).rank() == 5);
  CHECK(hecke_image(3, 3, v0).rank() == 6);
}

TEST_CASE("double commutant dims match the Schur-Weyl multiplicities") {
  for (auto [n, p] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const CommutantReport r = double_commutant(n, p, v0);
    const auto o = oracle::schur_weyl_dims(n, p);
    CAPTURE(n);
    CAPTURE(p);
    CHECK(r.passed());
    CHECK(static_cast<long long>(r.commutant_of_hecke) == o.commutant_of_hecke);
    CHECK(static_cast<long long>(r.pi_image) == o.commutant_of_hecke);
    CHECK(static_cast<long long>(r.hecke_image) == o.hecke_image);
    CHECK(static_cast<long long>(r.commutant_of_pi) == o.hecke_image);
    long long np = 1;
    for (int k = 0; k < p; ++k) np *= n;
    CHECK(o.total == np);
  }
  const auto j = double_commutant(2, 2, v0).to_json();
  CHECK(j["dims"]["pi_image"] == 10);
  CHECK(j["status"] == "pass");
}

TEST_CASE("degeneracy guard") {
  CHECK_NOTHROW(require_generic(v0, 6));
  CHECK_NOTHROW(require_generic(Rational(1), 6));
  CHECK_THROWS_AS(require_generic(Rational(0), 2), DegeneracyError);
  // [k] at rational v0 != 0 is a sum of positive terms times v0^{...}, so a zero has to be injected.
  const QIntEvaluator mock = [](int k, const Rational& v) { return k == 2 ? Rational(0) : evaluate_q_int(k, v); };
  try {
    require_generic(v0, 3, mock);
    FAIL("expected DegeneracyError");
  } catch (const DegeneracyError& err) {
    CHECK(err.k() == 2);
  }
  CHECK_NOTHROW(require_generic(v0, 1, mock));
  CHECK_THROWS_AS(hecke_image(2, 2, v0, mock), DegeneracyError);
  CHECK_THROWS_AS(verify_double_commutant(2, 2, v0, mock), DegeneracyError);
  for (int num = 1; num <= 5; ++num)
    for (int den = 1; den <= 5; ++den)
      for (int k = 1; k <= 6; ++k) CHECK(evaluate_q_int(k, Rational(num, den)) > 0);
}
