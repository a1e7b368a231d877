#pragma once

// Exact scalars for the whole library: the field Q(v) of rational functions
// in v, where v is the square root of the Hecke parameter q.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsw {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised by specialize() when the denominator vanishes at the chosen point.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Finite Laurent polynomial in v with rational coefficients.
///
/// Stored densely from the lowest to the highest exponent; both end
/// coefficients are nonzero, and the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly v_power(int exponent) { return monomial(1, exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1 && low_ == 0; }
  bool is_monomial() const { return coeffs_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;

  Rational coefficient(int exponent) const;
  const Rational& lowest_coefficient() const { return coeffs_.front(); }
  const Rational& highest_coefficient() const { return coeffs_.back(); }

  LaurentPoly shifted(int k) const;
  Rational evaluate(const Rational& v0) const;

  template <typename F>
  void for_each_term(F&& f) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (sgn(coeffs_[k]) != 0) f(low_ + static_cast<int>(k), coeffs_[k]);
  }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Division with remainder, both operands read as ordinary polynomials
  /// (exponents must be >= 0).
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
  /// Monic gcd of two polynomials with nonnegative exponents.
  static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Element of Q(v) kept in canonical form: numerator and denominator are
/// coprime, and the denominator is an ordinary polynomial in v with
/// constant term 1. Equal values therefore have equal representations.
class RationalScalar {
 public:
  RationalScalar() = default;
  RationalScalar(const Rational& c) : num_(c) {}  // NOLINT
  RationalScalar(long c) : num_(Rational(c)) {}   // NOLINT
  RationalScalar(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT
  RationalScalar(LaurentPoly num, LaurentPoly den);

  static RationalScalar v_power(int k) { return LaurentPoly::v_power(k); }
  static RationalScalar q_power(int m) { return LaurentPoly::v_power(2 * m); }
  static RationalScalar q() { return q_power(1); }
  /// q - q^{-1}, the recurring Hecke constant.
  static RationalScalar q_minus_qinv();

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_constant(); }

  RationalScalar inverse() const;
  RationalScalar operator-() const;
  RationalScalar& operator+=(const RationalScalar& o);
  RationalScalar& operator-=(const RationalScalar& o);
  RationalScalar& operator*=(const RationalScalar& o);
  RationalScalar& operator/=(const RationalScalar& o);
  friend RationalScalar operator+(RationalScalar a, const RationalScalar& b) { return a += b; }
  friend RationalScalar operator-(RationalScalar a, const RationalScalar& b) { return a -= b; }
  friend RationalScalar operator*(RationalScalar a, const RationalScalar& b) { return a *= b; }
  friend RationalScalar operator/(RationalScalar a, const RationalScalar& b) { return a /= b; }
  friend bool operator==(const RationalScalar& a, const RationalScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Re-derives the canonical form; a no-op on any constructed value.
  RationalScalar normalized() const { return RationalScalar(num_, den_); }

  std::string to_string() const;
  static RationalScalar parse(std::string_view text);

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

/// [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}; k must be nonnegative.
RationalScalar q_int(int k);
/// Same formula on all integers, odd in k.
RationalScalar q_int_signed(int k);
/// [k]! for k >= 0.
RationalScalar q_factorial(int k);
/// [l][l-1]...[l-m+1] for m >= 0, any integer l.
RationalScalar q_falling(int l, int m);
/// J! = [m_1]!...[m_n]! for a weakly increasing J with letters in 1..n.
RationalScalar multiindex_factorial(const std::vector<std::uint8_t>& J, int n);

/// Exact evaluation at v = v0. Throws PoleError if the denominator vanishes
/// and std::invalid_argument for v0 = 0.
Rational specialize(const RationalScalar& s, const Rational& v0);

std::string rational_to_string(const Rational& r);

}  // namespace qsw
