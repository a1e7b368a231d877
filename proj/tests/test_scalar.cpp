#include <doctest.h>

#include "qsw/scalar.hpp"

using namespace qsw;

namespace {

RationalScalar q() { return RationalScalar::q(); }
RationalScalar qi() { return RationalScalar::q_power(-1); }

// [k] as an explicit sum of powers of q, independent of q_int.
RationalScalar sum_form(int k) {
  RationalScalar s;
  for (int j = 0; j < k; ++j) s += RationalScalar::q_power(k - 1 - 2 * j);
  return s;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(3) == q() * q() + 1 + qi() * qi());
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == RationalScalar(1));
  for (int k = 0; k <= 8; ++k) CHECK(q_int(k) == sum_form(k));
  CHECK(q_int(3).to_string() == "q^2 + 1 + q^-2");
}

TEST_CASE("q-factorials and falling products") {
  CHECK(q_factorial(0) == RationalScalar(1));
  CHECK(q_factorial(2) == q() + qi());
  CHECK(q_factorial(3) == (q() * q() + 1 + qi() * qi()) * (q() + qi()));
  CHECK(q_falling(2, 2) == q() + qi());
  CHECK(q_falling(5, 0) == RationalScalar(1));
  CHECK(q_falling(1, 2).is_zero());
}

TEST_CASE("multiindex factorial") {
  CHECK(multiindex_factorial({1, 1, 2}, 2) == q() + qi());
  CHECK(multiindex_factorial({1, 2, 3}, 3) == RationalScalar(1));
  CHECK(multiindex_factorial({1, 1, 1}, 1) == q_factorial(3));
}

TEST_CASE("specialization") {
  // v0 = 3/2: q0 = 9/4.
  const Rational v0(3, 2);
  CHECK(specialize(q() + qi(), v0) == Rational(9, 4) + Rational(4, 9));
  CHECK(specialize(RationalScalar(1), v0) == 1);
  CHECK(specialize(q_int(3), Rational(4, 3)) == Rational(256, 81) + 1 + Rational(81, 256));
  CHECK(specialize(RationalScalar::v_power(-3), Rational(1, 2)) == 8);
  CHECK_THROWS_AS(specialize(RationalScalar(1) / (q() - 1), Rational(1)), PoleError);
}

TEST_CASE("canonical fractions") {
  const RationalScalar a = (q() * q() - 1) / (q() - 1);
  CHECK(a == q() + 1);
  CHECK(a.is_polynomial());
  const RationalScalar b = RationalScalar(1) / (q() - 1);
  CHECK(b.to_string() == "(-1)/(-q + 1)");
  CHECK(b * (q() - 1) == RationalScalar(1));
  CHECK(b.normalized() == b);
  CHECK((q() - qi()).inverse() * RationalScalar::q_minus_qinv() == RationalScalar(1));
  CHECK_THROWS(RationalScalar(0).inverse());
}

TEST_CASE("rendering and parsing") {
  CHECK(RationalScalar::v_power(1).to_string() == "q^(1/2)");
  CHECK(RationalScalar::v_power(-3).to_string() == "q^(-3/2)");
  CHECK(RationalScalar::q_power(2).to_string() == "q^2");
  CHECK((RationalScalar(Rational(1, 2)) * q() + 3).to_string() == "1/2 q + 3");
  for (const RationalScalar& s : {q_int(4), q_factorial(3) / (q() - 1), RationalScalar::v_power(5) + Rational(-2, 7),
                                  RationalScalar(0), (q() + RationalScalar::v_power(1)) / (q() * q() + 3)})
    CHECK(RationalScalar::parse(s.to_string()) == s);
  CHECK(RationalScalar::parse("q^(1/2) * q^(1/2)") == q());
  CHECK(RationalScalar::parse("(q^2 - 1)/(q - 1)") == q() + 1);
}

TEST_CASE("Laurent polynomial division") {
  const LaurentPoly a = LaurentPoly::v_power(6) - 1, b = LaurentPoly::v_power(2) - 1;
  const auto [quot, rem] = LaurentPoly::divmod(a, b);
  CHECK(rem.is_zero());
  CHECK(quot * b == a);
  CHECK(LaurentPoly::gcd(a, b * (LaurentPoly::v_power(1) + 3)) == b);
}
