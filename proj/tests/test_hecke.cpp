#include <doctest.h>

#include "qsw/hecke.hpp"

using namespace qsw;

namespace {

HeckeElement t(int r) { return HeckeElement::generator(r); }
const RationalScalar h = RationalScalar::q_minus_qinv();

}  // namespace

TEST_CASE("defining relations") {
  const HeckeElement one = HeckeElement::identity();
  for (int r = 1; r <= 4; ++r) {
    CHECK(t(r) * t(r) == one + h * t(r));
    CHECK(HeckeElement::generator_inverse(r) * t(r) == one);
    CHECK(t(r) * HeckeElement::generator_inverse(r) == one);
    // The inverse is t - (q - q^{-1}).
    CHECK(HeckeElement::generator_inverse(r) == t(r) - h * one);
  }
  CHECK(t(1) * t(2) * t(1) == t(2) * t(1) * t(2));
  CHECK(t(1) * t(3) == t(3) * t(1));
  CHECK(one * t(2) == t(2));
}

TEST_CASE("length-additive products are basis elements") {
  for (const auto& u : all_permutations(4))
    for (int r = 1; r <= 3; ++r) {
      const Permutation us = u.times_simple(r);
      if (us.length() > u.length())
        CHECK(HeckeElement::basis(u) * t(r) == HeckeElement::basis(us));
      else
        CHECK(HeckeElement::basis(u) * t(r) == HeckeElement::basis(us) + h * HeckeElement::basis(u));
    }
}

TEST_CASE("alpha shift") {
  CHECK(alpha_shift(t(1), 1) == t(2));
  const HeckeElement a = t(1) * t(2) + RationalScalar::q() * HeckeElement::identity();
  CHECK(alpha_shift(a, 0) == a);
  CHECK(alpha_shift(a * t(1), 2) == alpha_shift(a, 2) * t(3));
}

TEST_CASE("rendering") {
  CHECK((t(1) * t(2)).to_string() == "t1*t2");
  CHECK(HeckeElement::generator_inverse(1).to_string() == "t1 + (-q + q^-1) 1");
  CHECK(HeckeElement::identity().to_string() == "1");
  CHECK(hecke_word(Permutation::from_word(std::vector<int>{2, 1})) == "t2*t1");
}
