#include <doctest.h>

#include "qsw/operators.hpp"

using namespace qsw;

namespace {

const RationalScalar q = RationalScalar::q();
const RationalScalar qi = RationalScalar::q_power(-1);

XTensorElement term(const HeckeElement& h, const MultiIndex& J, int n = 2) {
  return left_hecke(h, basis_tensor(J, n));
}

HeckeElement t(int r) { return HeckeElement::generator(r); }

}  // namespace

TEST_CASE("derivation of e1 e1 e2") {
  const XTensorElement got = apply_derivation(1, basis_tensor({1, 1, 2}, 2));
  // Summands: r = 1 gives g(e_1) g(e_2) = t_1 e_1 t_1 e_2 = t_1 t_2 e_1 e_2;
  // r = 2 gives k^{-1}(e_1) g(e_2) = q^{-1} e_1 t_1 e_2 = q^{-1} t_2 e_1 e_2.
  const XTensorElement expected = term(t(1) * t(2), {1, 2}) + qi * term(t(2), {1, 2});
  CHECK(got == expected);
  CHECK(got.to_string() == "t1*t2 e[1,2] + (q^-1) t2 e[1,2]");
  CHECK(raw_derivation(1, {1, 1, 2}, 2) == got);
  CHECK(derivation_closed_form(1, {1, 1, 2}, 2) == got);
}

TEST_CASE("derivation edge cases") {
  CHECK(apply_derivation(1, embed_hecke(HeckeElement::identity(), 2)).is_zero());
  CHECK(apply_derivation(2, basis_tensor({1}, 2)).is_zero());
  CHECK(apply_derivation(1, basis_tensor({1}, 2)) == embed_hecke(HeckeElement::identity(), 2));
  for (const auto& J : all_multiindices(3, 3))
    for (int i = 1; i <= 3; ++i) CHECK(derivation_closed_form(i, J, 3) == raw_derivation(i, J, 3));
  CHECK(raw_derivation(2, {2, 1}, 2) == apply_derivation(2, basis_tensor({2, 1}, 2)));
}

TEST_CASE("derivation commutes with the left Hecke action") {
  const XTensorElement a = basis_tensor({1, 1, 2}, 2);
  CHECK(apply_derivation(1, left_hecke(t(1), a)) == left_hecke(t(1), apply_derivation(1, a)));
  // Non-minimal representative s_1 on e_1 e_2.
  XTensorElement raw(2);
  raw.add_raw(Permutation::simple(1), MultiIndex{1, 2}, 1);
  CHECK(apply_derivation(1, raw) == left_hecke(t(1), apply_derivation(1, basis_tensor({1, 2}, 2))));
}

TEST_CASE("right multiplications and K") {
  CHECK(apply_mul_vector(2, basis_tensor({1}, 2)) == basis_tensor({1, 2}, 2));
  CHECK(apply_mul_hecke(t(1), embed_hecke(t(2), 2)) == embed_hecke(t(2) * t(1), 2));
  CHECK(apply_mul_hecke(t(1), basis_tensor({1, 2}, 2)) == term(t(3), {1, 2}));
  const XTensorElement a = basis_tensor({1, 2}, 2);
  CHECK(apply_mul_hecke(HeckeElement::identity(), a) == a);
  CHECK(apply_K(1, 2, a) == q * a);
  CHECK(apply_K(1, 1, basis_tensor({1, 1}, 2)) == q * basis_tensor({1, 1}, 2));
  CHECK(apply_K(2, 2, basis_tensor({1, 1}, 2)) == basis_tensor({1, 1}, 2));
}

TEST_CASE("operator expressions") {
  using O = OperatorExpr;
  const XTensorElement one = embed_hecke(HeckeElement::identity(), 2);
  // R(e*_1) R(e_1) = R(e_1) R(t_1) R(e*_1) + K_1^{-1} on e_1.
  const XTensorElement e1 = basis_tensor({1}, 2);
  const O lhs = O::derivation(1) * O::mul_vector(1);
  const O rhs = O::mul_vector(1) * O::mul_generator(1) * O::derivation(1) + O::k_power(1, -2);
  CHECK(lhs(e1) == rhs(e1));
  // R(e_1) R(e_2) = R(e_2) R(e_1) R(t_1^{-1}) on 1.
  const O a = O::mul_vector(1) * O::mul_vector(2);
  const O b = O::mul_vector(2) * O::mul_vector(1) * O::mul_generator_inverse(1);
  CHECK(a(one) == b(one));
  CHECK(a.degree_shift() == 2);
  CHECK((O::derivation(1) * O::mul_vector(2)).degree_shift() == 0);
  CHECK(lhs(XTensorElement(2)).is_zero());
  CHECK(lhs.to_string() == "R(e*1) * R(e1)");
  CHECK(O::k_power(1, 1).to_string() == "K1^(1/2)");
  // Rightmost factor acts first.
  CHECK(mul_chain({1, 2})(one) == basis_tensor({2, 1}, 2));
  // R(e*_1) e_1 e_1 = t_1 e_1 + q^{-1} e_1, and once more gives t_1 + q^{-1}.
  CHECK(derivation_chain({1, 1})(basis_tensor({1, 1}, 2)) == embed_hecke(t(1) + qi * HeckeElement::identity(), 2));
}

TEST_CASE("K relations") {
  using O = OperatorExpr;
  const XTensorElement e2 = basis_tensor({2}, 2), e1 = basis_tensor({1}, 2);
  CHECK((O::k_power(1, 2) * O::mul_vector(1))(e2) == (q * (O::mul_vector(1) * O::k_power(1, 2)))(e2));
  CHECK((O::k_power(2, 2) * O::mul_vector(1))(e1) == (O::mul_vector(1) * O::k_power(2, 2))(e1));
}

TEST_CASE("verification suites are clean on a small slice") {
  CHECK(verify_commutation_relations(2, 2).passed());
  CHECK(verify_k_relations(2, 2).passed());
  const Report r = verify_derivation_equivariance(2, 2, 20, 7);
  CHECK(r.passed());
  CHECK(r.count(CheckStatus::Pass) > 20);
}

TEST_CASE("slice") {
  // Minimal coset reps of S_{p+2}/S_p times n^p tensors.
  CHECK(basis_slice(2, 1).size() == 6 * 2);
  CHECK(basis_slice(2, 2).size() == 12 * 4);
  CHECK(basis_slice(3, 0).size() == 2);
}
