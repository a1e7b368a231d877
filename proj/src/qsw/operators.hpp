#pragma once

// Right multiplications R(e_i) and R(h), the derivations R(e*_i), the
// diagonal operators K_i^{k/2}, and composable expressions built from them.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qsw/report.hpp"
#include "qsw/xtensor.hpp"

namespace qsw {

/// psi -> psi e_i.
XTensorElement apply_mul_vector(int i, const XTensorElement& a);
/// psi -> psi h; on degree p the Hecke part is multiplied by alpha^p(h).
XTensorElement apply_mul_hecke(const HeckeElement& h, const XTensorElement& a);
/// The derivation R(e*_i), lowering degree by one.
XTensorElement apply_derivation(int i, const XTensorElement& a);
/// Scales each term by v^{halfsteps * (number of letters equal to i)}.
XTensorElement apply_K(int i, int halfsteps, const XTensorElement& a);

/// R(e*_i) e_J evaluated as the sum over r of the literal products
/// k_i^{-1}(e_{j_1}) ... <e*_i, e_{j_r}> g_i(e_{j_{r+1}}) ... g_i(e_{j_p})
/// in the algebra, with g_i(e_j) = t_1^{+1} e_j for i <= j and t_1^{-1} e_j
/// otherwise.
XTensorElement raw_derivation(int i, const MultiIndex& J, int n);

/// Same value from the closed form: the r-th summand has Hecke part
/// t_r^{e_{r+1}} t_{r+1}^{e_{r+2}} ... t_{p-1}^{e_p}.
XTensorElement derivation_closed_form(int i, const MultiIndex& J, int n);

/// Immutable expression tree over the primitive operators. Composition
/// reads like the printed operator products: the rightmost factor acts first.
class OperatorExpr {
 public:
  enum class Kind { Identity, MulVector, MulHecke, Derivation, KPower, Scale, Sum, Compose };

  OperatorExpr() = default;  // identity

  static OperatorExpr identity() { return {}; }
  static OperatorExpr mul_vector(int i);
  static OperatorExpr mul_hecke(HeckeElement h);
  static OperatorExpr mul_generator(int r) { return mul_hecke(HeckeElement::generator(r)); }
  static OperatorExpr mul_generator_inverse(int r) { return mul_hecke(HeckeElement::generator_inverse(r)); }
  static OperatorExpr derivation(int i);
  /// K_i^{halfsteps/2}; halfsteps = 2 is K_i itself.
  static OperatorExpr k_power(int i, int halfsteps);
  static OperatorExpr scale(RationalScalar c, OperatorExpr op);

  Kind kind() const { return kind_; }

  XTensorElement apply(const XTensorElement& a) const;
  XTensorElement operator()(const XTensorElement& a) const { return apply(a); }

  /// Net change of degree, when it is the same on every branch.
  int degree_shift() const;

  std::string to_string() const;

  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const RationalScalar& c, const OperatorExpr& op) { return scale(c, op); }

 private:
  Kind kind_ = Kind::Identity;
  int index_ = 0;
  int halfsteps_ = 0;
  std::shared_ptr<const HeckeElement> hecke_;
  RationalScalar scalar_ = 1;
  std::vector<OperatorExpr> children_;
};

/// R(e_{i_1}) R(e_{i_2}) ... as a composition, in the written order.
OperatorExpr mul_chain(const std::vector<int>& letters);
/// R(e*_{i_1}) R(e*_{i_2}) ... in the written order.
OperatorExpr derivation_chain(const std::vector<int>& letters);

/// Basis elements T_w (x) e_J of degree p with w a minimal coset
/// representative inside S_{p+2}.
std::vector<BasisKey> basis_slice(int n, int p);
XTensorElement basis_element(const BasisKey& key, int n);

std::string basis_key_string(const BasisKey& key);

struct OperatorRelation {
  std::string id;
  OperatorExpr lhs;
  OperatorExpr rhs;
  nlohmann::json params;
};

/// Checks lhs == rhs on every slice element of degree 0..p_max. Record ids
/// are "<id>/p=<p>/<basis key>".
void check_relations_on_slice(Report& report, const std::vector<OperatorRelation>& relations, int n, int p_max);

/// The commutation relations between multiplications and derivations
/// (nine families, some with two right-hand sides), checked on every slice
/// element for 0 <= p <= p_max.
Report verify_commutation_relations(int n, int p_max);
/// The relations of K_j with R(e_i), R(e*_i) and R(t_r).
Report verify_k_relations(int n, int p_max);
/// Equivariance of the derivation under the left Hecke action, plus
/// independence of the coset representative used to evaluate it.
Report verify_derivation_equivariance(int n, int p_max, int samples, std::uint64_t seed);

}  // namespace qsw
