#include "qsw/operators.hpp"

#include <random>
#include <stdexcept>

namespace qsw {

XTensorElement apply_mul_vector(int i, const XTensorElement& a) {
  if (i < 1 || i > a.dim()) throw DimensionError("R(e_i): index out of range");
  XTensorElement out(a.dim());
  for (const auto& [k, c] : a.terms()) {
    MultiIndex J = k.J;
    J.push_back(static_cast<std::uint8_t>(i));
    out.add_raw(k.w, J, c);
  }
  return out;
}

XTensorElement apply_mul_hecke(const HeckeElement& h, const XTensorElement& a) {
  XTensorElement out(a.dim());
  for (const auto& [k, c] : a.terms()) {
    const HeckeElement prod = multiply(HeckeElement::basis(k.w), alpha_shift(h, k.degree()));
    for (const auto& [u, d] : prod.terms()) out.add_raw(u, k.J, c * d);
  }
  return out;
}

namespace {

// Hecke part and coefficient of the r-th summand of R(e*_i) e_J (0-based r).
HeckeElement summand_hecke_part(int i, const MultiIndex& J, std::size_t r) {
  HeckeElement h = HeckeElement::identity();
  for (std::size_t s = r + 1; s < J.size(); ++s) {
    const int slot = static_cast<int>(s);  // t_{s} in 1-based numbering of the summand
    h = (i <= J[s]) ? h.times_generator(slot) : h.times_generator_inverse(slot);
  }
  return h;
}

void add_derivation_terms(XTensorElement& out, const Permutation& w, int i, const MultiIndex& J,
                          const RationalScalar& c) {
  int seen = 0;
  for (std::size_t r = 0; r < J.size(); ++r) {
    if (J[r] != i) continue;
    MultiIndex rest = J;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(r));
    const RationalScalar coeff = c * RationalScalar::q_power(-seen);
    const HeckeElement h = multiply(HeckeElement::basis(w), summand_hecke_part(i, J, r));
    for (const auto& [u, d] : h.terms()) out.add_raw(u, rest, coeff * d);
    ++seen;
  }
}

}  // namespace

XTensorElement derivation_closed_form(int i, const MultiIndex& J, int n) {
  if (i < 1 || i > n) throw DimensionError("R(e*_i): index out of range");
  validate_multiindex(J, n);
  XTensorElement out(n);
  add_derivation_terms(out, Permutation(), i, J, 1);
  return out;
}

XTensorElement apply_derivation(int i, const XTensorElement& a) {
  if (i < 1 || i > a.dim()) throw DimensionError("R(e*_i): index out of range");
  XTensorElement out(a.dim());
  for (const auto& [k, c] : a.terms()) add_derivation_terms(out, k.w, i, k.J, c);
  return out;
}

XTensorElement raw_derivation(int i, const MultiIndex& J, int n) {
  if (i < 1 || i > n) throw DimensionError("R(e*_i): index out of range");
  validate_multiindex(J, n);
  XTensorElement total(n);
  for (std::size_t r = 0; r < J.size(); ++r) {
    if (J[r] != i) continue;
    XTensorElement acc = embed_hecke(HeckeElement::identity(), n);
    for (std::size_t s = 0; s < r; ++s) {
      XTensorElement factor = basis_tensor(MultiIndex{J[s]}, n);
      factor *= RationalScalar::q_power(J[s] == i ? -1 : 0);
      acc = product(acc, factor);
    }
    for (std::size_t s = r + 1; s < J.size(); ++s) {
      const HeckeElement g = (i <= J[s]) ? HeckeElement::generator(1) : HeckeElement::generator_inverse(1);
      acc = product(acc, left_hecke(g, basis_tensor(MultiIndex{J[s]}, n)));
    }
    total += acc;
  }
  return total;
}

XTensorElement apply_K(int i, int halfsteps, const XTensorElement& a) {
  if (i < 1 || i > a.dim()) throw DimensionError("K_i: index out of range");
  XTensorElement out(a.dim());
  for (const auto& [k, c] : a.terms()) {
    int count = 0;
    for (auto j : k.J)
      if (j == i) ++count;
    out.add_raw(k.w, k.J, c * RationalScalar::v_power(halfsteps * count));
  }
  return out;
}

// ---------------------------------------------------------------------------
// OperatorExpr

OperatorExpr OperatorExpr::mul_vector(int i) {
  OperatorExpr op;
  op.kind_ = Kind::MulVector;
  op.index_ = i;
  return op;
}

OperatorExpr OperatorExpr::mul_hecke(HeckeElement h) {
  OperatorExpr op;
  op.kind_ = Kind::MulHecke;
  op.hecke_ = std::make_shared<const HeckeElement>(std::move(h));
  return op;
}

OperatorExpr OperatorExpr::derivation(int i) {
  OperatorExpr op;
  op.kind_ = Kind::Derivation;
  op.index_ = i;
  return op;
}

OperatorExpr OperatorExpr::k_power(int i, int halfsteps) {
  OperatorExpr op;
  op.kind_ = Kind::KPower;
  op.index_ = i;
  op.halfsteps_ = halfsteps;
  return op;
}

OperatorExpr OperatorExpr::scale(RationalScalar c, OperatorExpr inner) {
  OperatorExpr op;
  op.kind_ = Kind::Scale;
  op.scalar_ = std::move(c);
  op.children_.push_back(std::move(inner));
  return op;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  if (a.kind_ == OperatorExpr::Kind::Identity) return b;
  if (b.kind_ == OperatorExpr::Kind::Identity) return a;
  OperatorExpr op;
  op.kind_ = OperatorExpr::Kind::Compose;
  for (const OperatorExpr* part : {&a, &b}) {
    if (part->kind_ == OperatorExpr::Kind::Compose)
      op.children_.insert(op.children_.end(), part->children_.begin(), part->children_.end());
    else
      op.children_.push_back(*part);
  }
  return op;
}

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr op;
  op.kind_ = OperatorExpr::Kind::Sum;
  for (const OperatorExpr* part : {&a, &b}) {
    if (part->kind_ == OperatorExpr::Kind::Sum)
      op.children_.insert(op.children_.end(), part->children_.begin(), part->children_.end());
    else
      op.children_.push_back(*part);
  }
  return op;
}

OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) { return a + OperatorExpr::scale(-1, b); }

XTensorElement OperatorExpr::apply(const XTensorElement& a) const {
  switch (kind_) {
    case Kind::Identity:
      return a;
    case Kind::MulVector:
      return apply_mul_vector(index_, a);
    case Kind::MulHecke:
      return apply_mul_hecke(*hecke_, a);
    case Kind::Derivation:
      return apply_derivation(index_, a);
    case Kind::KPower:
      return apply_K(index_, halfsteps_, a);
    case Kind::Scale: {
      XTensorElement r = children_.front().apply(a);
      r *= scalar_;
      return r;
    }
    case Kind::Sum: {
      XTensorElement r(a.dim());
      for (const auto& c : children_) r += c.apply(a);
      return r;
    }
    case Kind::Compose: {
      XTensorElement r = a;
      for (auto it = children_.rbegin(); it != children_.rend(); ++it) r = it->apply(r);
      return r;
    }
  }
  throw std::logic_error("unknown operator kind");
}

int OperatorExpr::degree_shift() const {
  switch (kind_) {
    case Kind::MulVector:
      return 1;
    case Kind::Derivation:
      return -1;
    case Kind::Identity:
    case Kind::MulHecke:
    case Kind::KPower:
      return 0;
    case Kind::Scale:
      return children_.front().degree_shift();
    case Kind::Sum: {
      const int d = children_.front().degree_shift();
      for (const auto& c : children_)
        if (c.degree_shift() != d) throw std::invalid_argument("sum of operators with different degree shifts");
      return d;
    }
    case Kind::Compose: {
      int d = 0;
      for (const auto& c : children_) d += c.degree_shift();
      return d;
    }
  }
  return 0;
}

std::string OperatorExpr::to_string() const {
  switch (kind_) {
    case Kind::Identity:
      return "Id";
    case Kind::MulVector:
      return "R(e" + std::to_string(index_) + ")";
    case Kind::Derivation:
      return "R(e*" + std::to_string(index_) + ")";
    case Kind::MulHecke: {
      for (int r = 1; r <= 16; ++r)
        if (*hecke_ == HeckeElement::generator_inverse(r)) return "R(t" + std::to_string(r) + "^-1)";
      const auto& t = hecke_->terms();
      if (t.size() == 1 && t.begin()->second.is_one() && t.begin()->first.length() >= 1)
        return "R(" + hecke_word(t.begin()->first) + ")";
      return "R(" + hecke_->to_string() + ")";
    }
    case Kind::KPower: {
      std::string s = "K" + std::to_string(index_);
      if (halfsteps_ == 2) return s;
      if (halfsteps_ % 2 == 0) return s + "^" + std::to_string(halfsteps_ / 2);
      return s + "^(" + std::to_string(halfsteps_) + "/2)";
    }
    case Kind::Scale:
      return "(" + scalar_.to_string() + ") " + children_.front().to_string();
    case Kind::Sum: {
      std::string s;
      for (const auto& c : children_) s += (s.empty() ? "" : " + ") + c.to_string();
      return s;
    }
    case Kind::Compose: {
      std::string s;
      for (const auto& c : children_) {
        std::string part = c.to_string();
        if (c.kind_ == Kind::Sum || c.kind_ == Kind::Scale) part = "[" + part + "]";
        s += (s.empty() ? "" : " * ") + part;
      }
      return s;
    }
  }
  return "?";
}

OperatorExpr mul_chain(const std::vector<int>& letters) {
  OperatorExpr op;
  for (int i : letters) op = op * OperatorExpr::mul_vector(i);
  return op;
}

OperatorExpr derivation_chain(const std::vector<int>& letters) {
  OperatorExpr op;
  for (int i : letters) op = op * OperatorExpr::derivation(i);
  return op;
}

std::vector<BasisKey> basis_slice(int n, int p) {
  std::vector<BasisKey> out;
  const auto reps = min_coset_reps(p + 2, p);
  const auto indices = all_multiindices(n, p);
  for (const auto& w : reps)
    for (const auto& J : indices) out.push_back(BasisKey{w, J});
  return out;
}

XTensorElement basis_element(const BasisKey& key, int n) {
  XTensorElement x(n);
  x.add_raw(key.w, key.J, 1);
  return x;
}

std::string basis_key_string(const BasisKey& key) {
  return key.w.to_string() + multiindex_to_string(key.J);
}

// ---------------------------------------------------------------------------
// Verification suites

namespace {

using Op = OperatorExpr;
using Relation = OperatorRelation;

std::string pair_tag(int i, int j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); }

}  // namespace

void check_relations_on_slice(Report& report, const std::vector<OperatorRelation>& relations, int n, int p_max) {
  for (int p = 0; p <= p_max; ++p) {
    for (const auto& key : basis_slice(n, p)) {
      const XTensorElement x = basis_element(key, n);
      for (const auto& rel : relations) {
        nlohmann::json params = rel.params;
        params["p"] = p;
        params["basis"] = basis_key_string(key);
        check_equal<XTensorElement>(report, rel.id + "/p=" + std::to_string(p) + "/" + basis_key_string(key),
                                    std::move(params), [&] { return rel.lhs(x); }, [&] { return rel.rhs(x); });
      }
    }
  }
}

Report verify_commutation_relations(int n, int p_max) {
  if (n < 1) throw std::invalid_argument("verify_commutation_relations: n must be >= 1");
  const Op Rt = Op::mul_generator(1);
  const Op Rti = Op::mul_generator_inverse(1);
  const RationalScalar q = RationalScalar::q();
  const RationalScalar qi = RationalScalar::q_power(-1);
  std::vector<Relation> rels;
  for (int i = 1; i <= n; ++i) {
    const Op Ei = Op::mul_vector(i), Di = Op::derivation(i);
    const nlohmann::json par = {{"i", i}};
    const std::string tag = "/i=" + std::to_string(i);
    rels.push_back({"commute.f1a" + tag, Ei * Ei, qi * (Ei * Ei * Rt), par});
    rels.push_back({"commute.f1b" + tag, Ei * Ei, q * (Ei * Ei * Rti), par});
    rels.push_back({"commute.f4a" + tag, Di * Di, qi * (Rt * Di * Di), par});
    rels.push_back({"commute.f4b" + tag, Di * Di, q * (Rti * Di * Di), par});
    rels.push_back({"commute.f7a" + tag, Di * Ei, Ei * Rt * Di + Op::k_power(i, -2), par});
    rels.push_back({"commute.f7b" + tag, Di * Ei, Ei * Rti * Di + Op::k_power(i, 2), par});
    for (int j = i + 1; j <= n; ++j) {
      const Op Ej = Op::mul_vector(j), Dj = Op::derivation(j);
      const nlohmann::json pp = {{"i", i}, {"j", j}};
      const std::string t2 = "/" + pair_tag(i, j);
      rels.push_back({"commute.f2" + t2, Ei * Ej, Ej * Ei * Rti, pp});
      rels.push_back({"commute.f3" + t2, Ej * Ei, Ei * Ej * Rt, pp});
      rels.push_back({"commute.f5" + t2, Di * Dj, Rti * Dj * Di, pp});
      rels.push_back({"commute.f6" + t2, Dj * Di, Rt * Di * Dj, pp});
      rels.push_back({"commute.f8" + t2, Dj * Ei, Ei * Rti * Dj, pp});
      rels.push_back({"commute.f9" + t2, Di * Ej, Ej * Rt * Di, pp});
    }
  }
  Report report;
  check_relations_on_slice(report, rels, n, p_max);
  return report;
}

Report verify_k_relations(int n, int p_max) {
  if (n < 1) throw std::invalid_argument("verify_k_relations: n must be >= 1");
  std::vector<Relation> rels;
  for (int j = 1; j <= n; ++j) {
    const Op Kj = Op::k_power(j, 2);
    for (int i = 1; i <= n; ++i) {
      const RationalScalar d = RationalScalar::q_power(i == j ? 1 : 0);
      const RationalScalar dinv = RationalScalar::q_power(i == j ? -1 : 0);
      const nlohmann::json pp = {{"i", i}, {"j", j}};
      const std::string t2 = "/" + pair_tag(i, j);
      rels.push_back({"kcommute.g1" + t2, Kj * Op::mul_vector(i), d * (Op::mul_vector(i) * Kj), pp});
      rels.push_back({"kcommute.g2" + t2, Kj * Op::derivation(i), dinv * (Op::derivation(i) * Kj), pp});
    }
    for (int r = 1; r <= 3; ++r) {
      const Op Rt = Op::mul_generator(r);
      rels.push_back({"kcommute.g3/j=" + std::to_string(j) + ",r=" + std::to_string(r), Kj * Rt, Rt * Kj,
                      {{"j", j}, {"r", r}}});
    }
  }
  Report report;
  check_relations_on_slice(report, rels, n, p_max);
  return report;
}

Report verify_derivation_equivariance(int n, int p_max, int samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("verify_derivation_equivariance: n must be >= 1");
  Report report;
  // Exhaustive: generators t_1..t_{p-1} on every plain basis tensor.
  for (int p = 1; p <= p_max; ++p) {
    for (const auto& J : all_multiindices(n, p)) {
      const XTensorElement x = basis_tensor(J, n);
      for (int s = 1; s < p; ++s) {
        const HeckeElement h = HeckeElement::generator(s);
        for (int i = 1; i <= n; ++i) {
          check_equal<XTensorElement>(
              report,
              "equivariance.exhaustive/p=" + std::to_string(p) + "/" + multiindex_to_string(J) + "/t" +
                  std::to_string(s) + "/i=" + std::to_string(i),
              {{"p", p}, {"J", multiindex_to_string(J)}, {"s", s}, {"i", i}},
              [&] { return apply_derivation(i, left_hecke(h, x)); },
              [&] { return left_hecke(h, apply_derivation(i, x)); });
        }
      }
    }
  }
  if (p_max < 1 || samples <= 0) return report;

  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t size) { return static_cast<std::size_t>(rng() % size); };

  // Random Hecke elements against random slice elements.
  for (int k = 0; k < samples; ++k) {
    const int p = 1 + static_cast<int>(pick(static_cast<std::size_t>(p_max)));
    const auto slice = basis_slice(n, p);
    const auto perms = all_permutations(p + 2);
    HeckeElement h;
    for (int t = 0; t < 2; ++t)
      h.add_term(perms[pick(perms.size())], RationalScalar(static_cast<long>(pick(5)) - 2) +
                                                RationalScalar::q_power(static_cast<int>(pick(3)) - 1));
    XTensorElement a(n);
    for (int t = 0; t < 2; ++t) a.add_raw(slice[pick(slice.size())].w, slice[pick(slice.size())].J, 1 + t);
    const int i = 1 + static_cast<int>(pick(static_cast<std::size_t>(n)));
    check_equal<XTensorElement>(report, "equivariance.random/" + std::to_string(k),
                                {{"p", p}, {"i", i}, {"h", h.to_string()}, {"a", a.to_string()}},
                                [&] { return apply_derivation(i, left_hecke(h, a)); },
                                [&] { return left_hecke(h, apply_derivation(i, a)); });
  }

  // Non-minimal representatives: the raw formula on (u, J) against the
  // normal-form route.
  for (int k = 0; k < samples; ++k) {
    int p = 1 + static_cast<int>(pick(static_cast<std::size_t>(p_max)));
    if (p < 2) p = std::min(2, p_max);
    if (p < 2) break;
    const auto perms = all_permutations(p + 2);
    Permutation u;
    do {
      u = perms[pick(perms.size())];
    } while (u.is_min_coset_rep(p));
    const auto indices = all_multiindices(n, p);
    const MultiIndex J = indices[pick(indices.size())];
    const int i = 1 + static_cast<int>(pick(static_cast<std::size_t>(n)));
    check_equal<XTensorElement>(
        report, "equivariance.representative/" + std::to_string(k),
        {{"p", p}, {"u", u.to_string()}, {"J", multiindex_to_string(J)}, {"i", i}},
        [&] { return left_hecke(HeckeElement::basis(u), raw_derivation(i, J, n)); },
        [&] {
          XTensorElement x(n);
          x.add_raw(u, J, 1);
          return apply_derivation(i, x);
        });
  }
  return report;
}

}  // namespace qsw
