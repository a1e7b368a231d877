#include "qsw/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qsw {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  if (sgn(c) != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }));
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && sgn(coeffs_[first]) == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (sgn(coeffs_[last - 1]) == 0) --last;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
  low_ += static_cast<int>(first);
}

Rational LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

Rational LaurentPoly::evaluate(const Rational& v0) const {
  if (is_zero()) return 0;
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v0 + *it;
  Rational base = 1;
  int e = low_;
  if (e != 0) {
    if (sgn(v0) == 0) throw std::invalid_argument("negative power of v evaluated at 0");
    Rational step = e > 0 ? v0 : Rational(1 / v0);
    for (int k = 0; k < std::abs(e); ++k) base *= step;
  }
  return acc * base;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if ((!a.is_zero() && a.low_ < 0) || b.low_ < 0)
    throw std::invalid_argument("divmod expects ordinary polynomials");
  LaurentPoly quotient;
  LaurentPoly rem = a;
  const int db = b.high();
  while (!rem.is_zero() && rem.high() >= db) {
    Rational c = rem.highest_coefficient() / b.highest_coefficient();
    LaurentPoly term = monomial(c, rem.high() - db);
    quotient += term;
    rem -= term * b;
  }
  return {quotient, rem};
}

LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = a.highest_coefficient();
  a *= Rational(1 / lead);
  return a;
}

namespace {

std::string v_power_text(int e) {
  if (e == 0) return "";
  if (e == 2) return "q";
  if (e % 2 == 0) return "q^" + std::to_string(e / 2);
  return "q^(" + std::to_string(e) + "/2)";
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Rational& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    std::string mono = v_power_text(e);
    std::string body;
    if (mono.empty())
      body = rational_to_string(mag);
    else if (mag == 1)
      body = mono;
    else
      body = rational_to_string(mag) + " " + mono;
    if (first)
      out = (sgn(c) < 0 ? "-" : "") + body;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// RationalScalar

RationalScalar::RationalScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

RationalScalar RationalScalar::q_minus_qinv() {
  static const RationalScalar value = LaurentPoly::v_power(2) - LaurentPoly::v_power(-2);
  return value;
}

bool RationalScalar::is_one() const { return den_.is_constant() && num_.is_constant() && num_.lowest_coefficient() == 1; }

void RationalScalar::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int shift = -den_.low();
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  if (den_.high() > 0) {
    const int nshift = num_.low();
    LaurentPoly g = LaurentPoly::gcd(num_.shifted(-nshift), den_);
    if (g.high() > 0) {
      num_ = LaurentPoly::divmod(num_.shifted(-nshift), g).first.shifted(nshift);
      den_ = LaurentPoly::divmod(den_, g).first;
    }
  }
  Rational c = den_.lowest_coefficient();
  if (c != 1) {
    Rational inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalScalar RationalScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  return RationalScalar(den_, num_);
}

RationalScalar RationalScalar::operator-() const {
  RationalScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalScalar& RationalScalar::operator+=(const RationalScalar& o) {
  if (o.is_zero()) return *this;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalScalar& RationalScalar::operator-=(const RationalScalar& o) { return *this += -o; }

RationalScalar& RationalScalar::operator*=(const RationalScalar& o) {
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RationalScalar& RationalScalar::operator/=(const RationalScalar& o) { return *this *= o.inverse(); }

std::string RationalScalar::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// q-combinatorics

RationalScalar q_int_signed(int k) {
  if (k < 0) return -q_int_signed(-k);
  LaurentPoly p;
  for (int e = k - 1; e >= -k + 1; e -= 2) p += LaurentPoly::v_power(2 * e);
  return p;
}

RationalScalar q_int(int k) {
  if (k < 0) throw std::invalid_argument("q_int: negative argument " + std::to_string(k));
  return q_int_signed(k);
}

RationalScalar q_factorial(int k) {
  if (k < 0) throw std::invalid_argument("q_factorial: negative argument " + std::to_string(k));
  RationalScalar r = 1;
  for (int j = 2; j <= k; ++j) r *= q_int(j);
  return r;
}

RationalScalar q_falling(int l, int m) {
  if (m < 0) throw std::invalid_argument("q_falling: negative length " + std::to_string(m));
  RationalScalar r = 1;
  for (int j = 0; j < m; ++j) r *= q_int_signed(l - j);
  return r;
}

RationalScalar multiindex_factorial(const std::vector<std::uint8_t>& J, int n) {
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (J[k] < 1 || J[k] > n) throw std::invalid_argument("multiindex_factorial: letter out of range");
    if (k > 0 && J[k] < J[k - 1]) throw std::invalid_argument("multiindex_factorial: index is not weakly increasing");
    ++mult[J[k]];
  }
  RationalScalar r = 1;
  for (int m : mult) r *= q_factorial(m);
  return r;
}

Rational specialize(const RationalScalar& s, const Rational& v0) {
  if (sgn(v0) == 0) throw std::invalid_argument("specialize: v0 must be nonzero");
  Rational den = s.denominator().evaluate(v0);
  if (sgn(den) == 0) throw PoleError("specialize: pole of " + s.to_string() + " at v = " + v0.get_str());
  return s.numerator().evaluate(v0) / den;
}

}  // namespace qsw
