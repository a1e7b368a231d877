#pragma once

// The extended tensor algebra: the direct sum over p of the induced modules
// H_inf(q) (x)_{H_p(q)} V^{(x)p}, stored in normal form.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsw/hecke.hpp"

namespace qsw {

/// Letters j_1..j_p of a basis tensor e_{j_1}...e_{j_p}, each in 1..n.
using MultiIndex = std::vector<std::uint8_t>;

/// Linear combination of plain basis tensors of one fixed length.
using PlainTensor = std::map<MultiIndex, RationalScalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate_multiindex(const MultiIndex& J, int n);
std::string multiindex_to_string(const MultiIndex& J);  // e[1,2]; e[] for length 0
/// All n^p multi-indices in lexicographic order.
std::vector<MultiIndex> all_multiindices(int n, int p);

void add_plain(PlainTensor& x, const MultiIndex& J, const RationalScalar& c);

/// The generator t_r acting on slots r, r+1 of V^{(x)p}.
PlainTensor t_action(int r, const PlainTensor& x);
/// Its two-sided inverse t_r - (q - q^{-1}).
PlainTensor t_action_inverse(int r, const PlainTensor& x);

/// Basis pair (Hecke part, tensor part); the degree is J.size().
struct BasisKey {
  Permutation w;
  MultiIndex J;
  int degree() const { return static_cast<int>(J.size()); }
  friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

struct BasisKeyLess {
  bool operator()(const BasisKey& a, const BasisKey& b) const {
    if (a.J.size() != b.J.size()) return a.J.size() < b.J.size();
    if (a.w != b.w) return a.w < b.w;
    return a.J < b.J;
  }
};

/// Which right descent is peeled first during normalization. Any choice
/// gives the same normal form; the default is the smallest.
enum class ReductionStrategy { SmallestDescent, LargestDescent };

class XTensorElement {
 public:
  using Terms = std::map<BasisKey, RationalScalar, BasisKeyLess>;

  explicit XTensorElement(int n) : n_(n) {}

  int dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalScalar coefficient(const Permutation& w, const MultiIndex& J) const;

  /// Adds c * T_u (x) e_J, reducing u to its minimal coset representative.
  void add_raw(const Permutation& u, const MultiIndex& J, const RationalScalar& c,
               ReductionStrategy strategy = ReductionStrategy::SmallestDescent);
  /// Adds c * T_u (x) x for a plain tensor x of degree p.
  void add_raw(const Permutation& u, const PlainTensor& x, const RationalScalar& c,
               ReductionStrategy strategy = ReductionStrategy::SmallestDescent);

  XTensorElement& operator+=(const XTensorElement& o);
  XTensorElement& operator-=(const XTensorElement& o);
  XTensorElement& operator*=(const RationalScalar& c);
  friend XTensorElement operator+(XTensorElement a, const XTensorElement& b) { return a += b; }
  friend XTensorElement operator-(XTensorElement a, const XTensorElement& b) { return a -= b; }
  friend XTensorElement operator*(const RationalScalar& c, XTensorElement a) { return a *= c; }
  friend bool operator==(const XTensorElement& a, const XTensorElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Degree-p homogeneous component.
  XTensorElement component(int p) const;
  /// -1 for zero, the common degree if homogeneous, -2 otherwise.
  int homogeneous_degree() const;
  /// True iff every term has identity Hecke part, i.e. lies in V^{(x)p}.
  bool is_plain() const;

  /// Grammar: "(<scalar>) <hecke-word> e[<j1>,...]" joined by " + ".
  std::string to_string() const;

 private:
  void insert_normal(BasisKey key, const RationalScalar& c);

  int n_;
  Terms terms_;
};

using RawTerms = std::vector<std::pair<BasisKey, RationalScalar>>;

/// Rewrites T_u (x) e_J = T_{u s_r} (x) t_r e_J while u has a right descent
/// r < p, then collects terms.
XTensorElement normalize(const RawTerms& raw, int n, ReductionStrategy strategy = ReductionStrategy::SmallestDescent);

/// (s v_1..v_k)(t w_1..w_l) = s alpha^k(t) v_1..v_k w_1..w_l.
XTensorElement product(const XTensorElement& a, const XTensorElement& b);
/// Left action of H_inf(q).
XTensorElement left_hecke(const HeckeElement& h, const XTensorElement& a);
/// Plain tensors as the identity-coset part.
XTensorElement embed_tensor(const PlainTensor& x, int n);
XTensorElement basis_tensor(const MultiIndex& J, int n);
/// A Hecke element as a degree-0 element.
XTensorElement embed_hecke(const HeckeElement& h, int n);

/// Identity-coset part as a plain tensor of degree p; throws if anything
/// else is present.
PlainTensor to_plain(const XTensorElement& a, int p);

}  // namespace qsw
