#pragma once

// The Iwahori-Hecke algebra H_inf(q) in the T_w basis, with
// (t_r - q)(t_r + q^{-1}) = 0.

#include <map>
#include <string>

#include "qsw/permutation.hpp"
#include "qsw/scalar.hpp"

namespace qsw {

class HeckeElement {
 public:
  using Terms = std::map<Permutation, RationalScalar>;

  HeckeElement() = default;
  explicit HeckeElement(const RationalScalar& c);  // c * T_id

  static HeckeElement identity() { return HeckeElement(RationalScalar(1)); }
  static HeckeElement basis(const Permutation& w, const RationalScalar& c = 1);
  static HeckeElement generator(int r);
  /// t_r^{-1} = t_r - (q - q^{-1}).
  static HeckeElement generator_inverse(int r);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalScalar coefficient(const Permutation& w) const;

  void add_term(const Permutation& w, const RationalScalar& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const RationalScalar& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const RationalScalar& c, HeckeElement a) { return a *= c; }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// T_{s_r} * this.
  HeckeElement generator_times(int r) const;
  /// this * T_{s_r}.
  HeckeElement times_generator(int r) const;
  /// this * T_{s_r}^{-1}.
  HeckeElement times_generator_inverse(int r) const;

  /// Text form such as "t1*t2 + (q - q^-1) t1"; "1" is the identity.
  std::string to_string() const;

 private:
  Terms terms_;
};

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);
inline HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return multiply(a, b); }

/// The endomorphism t_r -> t_{r+k}.
HeckeElement alpha_shift(const HeckeElement& a, int k);

/// Printable Hecke word for a basis element: "t1*t2", empty for the identity.
std::string hecke_word(const Permutation& w);

/// Order used when printing: longer permutations first, then one-line order.
bool print_order_less(const Permutation& a, const Permutation& b);

}  // namespace qsw
