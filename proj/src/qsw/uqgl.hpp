#pragma once

// Matrices of the U_q(gl_n) generators on V^{(x)p} and the checks that tie
// them to the operators on the extended tensor algebra.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsw/linalg.hpp"
#include "qsw/operators.hpp"

namespace qsw {

/// Dense n^p x n^p matrix. Basis tensors are ordered lexicographically with
/// the first letter most significant; entry (I, J) is the coefficient of e_I
/// in the image of e_J.
class EndoMatrix {
 public:
  EndoMatrix(int n, int p);

  static EndoMatrix identity(int n, int p);
  /// diag(v^{halfsteps * multiplicity of i}).
  static EndoMatrix k_power(int i, int halfsteps, int n, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  std::size_t size() const { return size_; }

  std::size_t index_of(const MultiIndex& J) const;
  MultiIndex multiindex_at(std::size_t k) const;

  const RationalScalar& at(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }
  RationalScalar& at(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }

  /// Image of e_J as a plain tensor.
  PlainTensor column(const MultiIndex& J) const;
  PlainTensor apply(const PlainTensor& x) const;

  bool is_zero() const;

  EndoMatrix& operator+=(const EndoMatrix& o);
  EndoMatrix& operator-=(const EndoMatrix& o);
  EndoMatrix& operator*=(const RationalScalar& c);
  friend EndoMatrix operator+(EndoMatrix a, const EndoMatrix& b) { return a += b; }
  friend EndoMatrix operator-(EndoMatrix a, const EndoMatrix& b) { return a -= b; }
  friend EndoMatrix operator*(const RationalScalar& c, EndoMatrix a) { return a *= c; }
  friend EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b);
  friend bool operator==(const EndoMatrix& a, const EndoMatrix& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.entries_ == b.entries_;
  }

  /// Entries evaluated at v = v0, flattened row-major.
  SparseVec specialize_flat(const Rational& v0) const;

  /// Nonzero entries as "e[..] -> c e[..]" lines.
  std::string to_string() const;
  /// {"n", "p", "basis": [...], "rows": [[...], ...]} with scalar text entries.
  nlohmann::json to_json() const;

 private:
  int n_;
  int p_;
  std::size_t size_;
  std::vector<RationalScalar> entries_;
};

EndoMatrix plain_operator_matrix(int n, int p, const std::function<PlainTensor(const MultiIndex&)>& op);

struct UqGenerator {
  enum class Kind { E, F, KHalf, KHalfInverse };
  Kind kind;
  int index;

  std::string to_string() const;  // e1, f2, k1^(1/2), k1^(-1/2)
};

void validate_generator(const UqGenerator& g, int n);

EndoMatrix pi_generator(const UqGenerator& g, int n, int p);

/// Which intermediate index the recursion splits at.
enum class EhatSplit { Largest, Smallest };

/// pi(E_ij) for i != j, built from the generators by the recursion.
EndoMatrix ehat_matrix(int i, int j, int n, int p, EhatSplit split = EhatSplit::Largest);

/// pi of the L-operator E_ij(a).
EndoMatrix l_operator(int i, int j, const RationalScalar& a, int n, int p, EhatSplit split = EhatSplit::Largest);

/// Every defining relation of U_q(gl_n) as a matrix identity under pi.
Report verify_uq_relations(int n, int p);

struct RestrictionResult {
  std::optional<EndoMatrix> matrix;
  // Set when some image leaves the identity coset.
  std::string offending_input;
  std::string stray_term;
  bool ok() const { return matrix.has_value(); }
};

/// Matrix of a degree-neutral operator on the copy of V^{(x)p} inside the
/// extended tensor algebra.
RestrictionResult restrict_operator(const OperatorExpr& op, int n, int p);

/// pi(E_ij(1)) against the restriction of R(e_i) R(e*_j), all i, j.
Report verify_l_operators(int n, int p);

/// The five families of three-factor relations with both orderings.
Report verify_triple_relations(int n, int p_max);

/// The subalgebra generated by the pi-matrices at v = v0, found by
/// saturating the span under left multiplication by the generators.
struct SpanSaturation {
  EchelonBasis basis;
  std::vector<std::size_t> dimension_trace;  // dimension after each round
};
SpanSaturation pi_image(int n, int p, const Rational& v0);

struct ChainMembershipConfig {
  int n = 2;
  int p = 2;
  int k_max = 2;
  int samples = 25;
  Rational v0 = Rational(4, 3);
  std::uint64_t seed = 0;
};
/// Membership of random restricted chains R(v_k)..R(v_1) R(v*_1)..R(v*_k)
/// in the pi-image.
Report verify_chain_membership(const ChainMembershipConfig& cfg);

}  // namespace qsw
