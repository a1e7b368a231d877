#include "qsw/hecke.hpp"

#include <algorithm>
#include <vector>

namespace qsw {

HeckeElement::HeckeElement(const RationalScalar& c) { add_term(Permutation(), c); }

HeckeElement HeckeElement::basis(const Permutation& w, const RationalScalar& c) {
  HeckeElement h;
  h.add_term(w, c);
  return h;
}

HeckeElement HeckeElement::generator(int r) { return basis(Permutation::simple(r)); }

HeckeElement HeckeElement::generator_inverse(int r) {
  HeckeElement h = generator(r);
  h.add_term(Permutation(), -RationalScalar::q_minus_qinv());
  return h;
}

RationalScalar HeckeElement::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RationalScalar() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const RationalScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const RationalScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

HeckeElement HeckeElement::generator_times(int r) const {
  HeckeElement out;
  const RationalScalar& h = RationalScalar::q_minus_qinv();
  for (const auto& [w, c] : terms_) {
    out.add_term(w.simple_times(r), c);
    if (w.has_left_descent(r)) out.add_term(w, h * c);
  }
  return out;
}

HeckeElement HeckeElement::times_generator(int r) const {
  HeckeElement out;
  const RationalScalar& h = RationalScalar::q_minus_qinv();
  for (const auto& [w, c] : terms_) {
    out.add_term(w.times_simple(r), c);
    if (w.has_right_descent(r)) out.add_term(w, h * c);
  }
  return out;
}

HeckeElement HeckeElement::times_generator_inverse(int r) const {
  HeckeElement out = times_generator(r);
  HeckeElement correction = *this;
  correction *= RationalScalar::q_minus_qinv();
  return out -= correction;
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [u, c] : a.terms()) {
    HeckeElement x = b;
    const auto word = u.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = x.generator_times(*it);
    x *= c;
    out += x;
  }
  return out;
}

HeckeElement alpha_shift(const HeckeElement& a, int k) {
  if (k < 0) throw std::invalid_argument("alpha_shift: k must be >= 0");
  HeckeElement out;
  for (const auto& [w, c] : a.terms()) out.add_term(shift(w, k), c);
  return out;
}

std::string hecke_word(const Permutation& w) {
  std::string s;
  for (int r : w.reduced_word()) {
    if (!s.empty()) s += "*";
    s += "t" + std::to_string(r);
  }
  return s;
}

bool print_order_less(const Permutation& a, const Permutation& b) {
  const int la = a.length(), lb = b.length();
  if (la != lb) return la > lb;
  return a < b;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return print_order_less(x->first, y->first); });
  std::string out;
  for (const auto* t : order) {
    if (!out.empty()) out += " + ";
    const std::string word = hecke_word(t->first);
    if (t->second.is_one()) {
      out += word.empty() ? "1" : word;
    } else {
      out += "(" + t->second.to_string() + ") " + (word.empty() ? "1" : word);
    }
  }
  return out;
}

}  // namespace qsw
