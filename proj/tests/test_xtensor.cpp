#include <doctest.h>

#include "qsw/xtensor.hpp"

using namespace qsw;

namespace {

const RationalScalar q = RationalScalar::q();
const RationalScalar h = RationalScalar::q_minus_qinv();

PlainTensor e(const MultiIndex& J) { return {{J, 1}}; }

XTensorElement term(const Permutation& w, const MultiIndex& J, const RationalScalar& c = 1, int n = 2) {
  XTensorElement x(n);
  x.add_raw(w, J, c);
  return x;
}

}  // namespace

TEST_CASE("t action on two letters") {
  CHECK(t_action(1, e({1, 1})) == PlainTensor{{{1, 1}, q}});
  CHECK(t_action(1, e({2, 1})) == e({1, 2}));
  CHECK(t_action(1, e({1, 2})) == PlainTensor{{{2, 1}, 1}, {{1, 2}, h}});
  CHECK(t_action_inverse(1, e({1, 1})) == PlainTensor{{{1, 1}, RationalScalar::q_power(-1)}});
  // Solving t(x) = e_1 e_2 on span{e_1e_2, e_2e_1}: t(e_2e_1) = e_1e_2.
  CHECK(t_action_inverse(1, e({1, 2})) == e({2, 1}));
  for (const auto& J : all_multiindices(3, 3))
    for (int r = 1; r <= 2; ++r) {
      CHECK(t_action(r, t_action_inverse(r, e(J))) == e(J));
      CHECK(t_action_inverse(r, t_action(r, e(J))) == e(J));
    }
}

TEST_CASE("normal form") {
  CHECK(term(Permutation::simple(1), {1, 1}) == term(Permutation(), {1, 1}, q));
  CHECK(term(Permutation(), {2, 1}).terms().size() == 1);
  // s1 s2 s1 on two letters peels both descents inside S_2 only after rewriting.
  const Permutation w = Permutation::from_word(std::vector<int>{1, 2, 1});
  for (const auto& J : all_multiindices(2, 2)) {
    XTensorElement a(2), b(2);
    a.add_raw(w, J, 1, ReductionStrategy::SmallestDescent);
    b.add_raw(w, J, 1, ReductionStrategy::LargestDescent);
    CHECK(a == b);
    for (const auto& [key, c] : a.terms()) CHECK(key.w.is_min_coset_rep(2));
  }
  CHECK(term(Permutation::simple(1), {1, 2}).to_string() == "(q - q^-1) e[1,2] + e[2,1]");
}

TEST_CASE("product") {
  CHECK(product(basis_tensor({1}, 2), basis_tensor({2}, 2)) == basis_tensor({1, 2}, 2));
  // The right factor's Hecke part is shifted past the left factor's letters.
  const XTensorElement a = term(Permutation::simple(1), {1, 2});
  const XTensorElement b = term(Permutation::simple(1), {1});
  const HeckeElement head = HeckeElement::generator(1) * alpha_shift(HeckeElement::generator(1), 2);
  CHECK(product(a, b) == left_hecke(head, basis_tensor({1, 2, 1}, 2)));
  const XTensorElement s = embed_hecke(HeckeElement::generator(1), 2), t = embed_hecke(HeckeElement::generator(2), 2);
  CHECK(product(s, t) == embed_hecke(HeckeElement::generator(1) * HeckeElement::generator(2), 2));
  CHECK(product(a, b).homogeneous_degree() == 3);
}

TEST_CASE("left Hecke action") {
  const XTensorElement a = basis_tensor({1, 1}, 2);
  CHECK(left_hecke(HeckeElement::identity(), a) == a);
  CHECK(left_hecke(HeckeElement::generator(1), a) == q * a);
  const XTensorElement b = basis_tensor({1, 2}, 2);
  CHECK(left_hecke(HeckeElement::generator(3), b) == term(Permutation::simple(3), {1, 2}));
  // On the identity coset the action is the tensor action.
  for (const auto& J : all_multiindices(2, 3))
    CHECK(left_hecke(HeckeElement::generator(2), basis_tensor(J, 2)) == embed_tensor(t_action(2, e(J)), 2));
}

TEST_CASE("embedding") {
  CHECK(embed_tensor(e({1, 2}), 2) == term(Permutation(), {1, 2}));
  CHECK(embed_tensor({}, 2).is_zero());
  CHECK(embed_tensor(PlainTensor{{{1}, q}}, 2) == term(Permutation(), {1}, q));
  CHECK(to_plain(basis_tensor({2, 1}, 2), 2) == e({2, 1}));
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(basis_tensor({3}, 2), DimensionError);
  CHECK_THROWS_AS(validate_multiindex({0}, 2), DimensionError);
  CHECK(all_multiindices(3, 2).size() == 9);
  CHECK(multiindex_to_string({}) == "e[]");
}
