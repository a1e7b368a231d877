#include "qsw/xtensor.hpp"

#include <algorithm>

namespace qsw {

void validate_multiindex(const MultiIndex& J, int n) {
  for (auto j : J)
    if (j < 1 || j > n)
      throw DimensionError("letter " + std::to_string(j) + " out of range 1.." + std::to_string(n));
}

std::string multiindex_to_string(const MultiIndex& J) {
  std::string s = "e[";
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(J[k]);
  }
  return s + "]";
}

std::vector<MultiIndex> all_multiindices(int n, int p) {
  std::vector<MultiIndex> out;
  MultiIndex J(static_cast<std::size_t>(p), 1);
  if (n < 1 && p > 0) return out;
  while (true) {
    out.push_back(J);
    int k = p - 1;
    while (k >= 0 && J[static_cast<std::size_t>(k)] == n) J[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++J[static_cast<std::size_t>(k)];
  }
  return out;
}

void add_plain(PlainTensor& x, const MultiIndex& J, const RationalScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(J, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

PlainTensor t_action(int r, const PlainTensor& x) {
  PlainTensor out;
  const RationalScalar q = RationalScalar::q();
  const RationalScalar& h = RationalScalar::q_minus_qinv();
  for (const auto& [J, c] : x) {
    if (r < 1 || static_cast<std::size_t>(r) >= J.size())
      throw std::out_of_range("t_action: slot " + std::to_string(r) + " out of range for degree " +
                              std::to_string(J.size()));
    const auto a = J[static_cast<std::size_t>(r - 1)], b = J[static_cast<std::size_t>(r)];
    if (a == b) {
      add_plain(out, J, q * c);
      continue;
    }
    MultiIndex S = J;
    std::swap(S[static_cast<std::size_t>(r - 1)], S[static_cast<std::size_t>(r)]);
    add_plain(out, S, c);
    if (a < b) add_plain(out, J, h * c);
  }
  return out;
}

PlainTensor t_action_inverse(int r, const PlainTensor& x) {
  PlainTensor out = t_action(r, x);
  const RationalScalar& h = RationalScalar::q_minus_qinv();
  for (const auto& [J, c] : x) add_plain(out, J, -(h * c));
  return out;
}

// ---------------------------------------------------------------------------

RationalScalar XTensorElement::coefficient(const Permutation& w, const MultiIndex& J) const {
  auto it = terms_.find(BasisKey{w, J});
  return it == terms_.end() ? RationalScalar() : it->second;
}

void XTensorElement::insert_normal(BasisKey key, const RationalScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void XTensorElement::add_raw(const Permutation& u, const PlainTensor& x, const RationalScalar& c,
                             ReductionStrategy strategy) {
  if (c.is_zero() || x.empty()) return;
  const int p = static_cast<int>(x.begin()->first.size());
  for (const auto& [J, d] : x) validate_multiindex(J, n_);
  Permutation w = u;
  PlainTensor y = x;
  while (true) {
    int r = 0;
    if (strategy == ReductionStrategy::SmallestDescent) {
      for (int s = 1; s < p; ++s)
        if (w.has_right_descent(s)) {
          r = s;
          break;
        }
    } else {
      for (int s = p - 1; s >= 1; --s)
        if (w.has_right_descent(s)) {
          r = s;
          break;
        }
    }
    if (r == 0) break;
    w = w.times_simple(r);
    y = t_action(r, y);
  }
  for (const auto& [J, d] : y) insert_normal(BasisKey{w, J}, c * d);
}

void XTensorElement::add_raw(const Permutation& u, const MultiIndex& J, const RationalScalar& c,
                             ReductionStrategy strategy) {
  if (c.is_zero()) return;
  if (u.is_min_coset_rep(static_cast<int>(J.size()))) {
    validate_multiindex(J, n_);
    insert_normal(BasisKey{u, J}, c);
    return;
  }
  add_raw(u, PlainTensor{{J, RationalScalar(1)}}, c, strategy);
}

XTensorElement& XTensorElement::operator+=(const XTensorElement& o) {
  if (o.n_ != n_) throw DimensionError("dimension mismatch in sum");
  for (const auto& [k, c] : o.terms_) insert_normal(k, c);
  return *this;
}

XTensorElement& XTensorElement::operator-=(const XTensorElement& o) {
  if (o.n_ != n_) throw DimensionError("dimension mismatch in difference");
  for (const auto& [k, c] : o.terms_) insert_normal(k, -c);
  return *this;
}

XTensorElement& XTensorElement::operator*=(const RationalScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

XTensorElement XTensorElement::component(int p) const {
  XTensorElement out(n_);
  for (const auto& [k, c] : terms_)
    if (k.degree() == p) out.terms_.emplace(k, c);
  return out;
}

int XTensorElement::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d ? d : -2;
}

bool XTensorElement::is_plain() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.w.is_identity(); });
}

std::string XTensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    if (x->first.J.size() != y->first.J.size()) return x->first.J.size() < y->first.J.size();
    if (x->first.w != y->first.w) return print_order_less(x->first.w, y->first.w);
    return x->first.J < y->first.J;
  });
  std::string out;
  for (const auto* t : order) {
    std::string body;
    const std::string word = hecke_word(t->first.w);
    if (!word.empty()) body = word;
    if (!t->first.J.empty()) body += (body.empty() ? "" : " ") + multiindex_to_string(t->first.J);
    if (body.empty()) body = "1";
    if (!out.empty()) out += " + ";
    if (!t->second.is_one()) out += "(" + t->second.to_string() + ") ";
    out += body;
  }
  return out;
}

// ---------------------------------------------------------------------------

XTensorElement normalize(const RawTerms& raw, int n, ReductionStrategy strategy) {
  XTensorElement out(n);
  for (const auto& [key, c] : raw) out.add_raw(key.w, key.J, c, strategy);
  return out;
}

XTensorElement product(const XTensorElement& a, const XTensorElement& b) {
  if (a.dim() != b.dim()) throw DimensionError("dimension mismatch in product");
  XTensorElement out(a.dim());
  for (const auto& [ka, ca] : a.terms()) {
    const HeckeElement left = HeckeElement::basis(ka.w);
    for (const auto& [kb, cb] : b.terms()) {
      MultiIndex J = ka.J;
      J.insert(J.end(), kb.J.begin(), kb.J.end());
      const RationalScalar c = ca * cb;
      const HeckeElement h = multiply(left, HeckeElement::basis(shift(kb.w, ka.degree())));
      for (const auto& [u, d] : h.terms()) out.add_raw(u, J, c * d);
    }
  }
  return out;
}

XTensorElement left_hecke(const HeckeElement& h, const XTensorElement& a) {
  XTensorElement out(a.dim());
  for (const auto& [k, c] : a.terms()) {
    const HeckeElement prod = multiply(h, HeckeElement::basis(k.w));
    for (const auto& [u, d] : prod.terms()) out.add_raw(u, k.J, c * d);
  }
  return out;
}

XTensorElement embed_tensor(const PlainTensor& x, int n) {
  XTensorElement out(n);
  for (const auto& [J, c] : x) out.add_raw(Permutation(), J, c);
  return out;
}

XTensorElement basis_tensor(const MultiIndex& J, int n) {
  XTensorElement out(n);
  out.add_raw(Permutation(), J, 1);
  return out;
}

XTensorElement embed_hecke(const HeckeElement& h, int n) {
  XTensorElement out(n);
  for (const auto& [w, c] : h.terms()) out.add_raw(w, MultiIndex{}, c);
  return out;
}

PlainTensor to_plain(const XTensorElement& a, int p) {
  PlainTensor out;
  for (const auto& [k, c] : a.terms()) {
    if (!k.w.is_identity() || k.degree() != p)
      throw std::invalid_argument("element is not a plain tensor of degree " + std::to_string(p));
    out.emplace(k.J, c);
  }
  return out;
}

}  // namespace qsw
