#pragma once

// The q-Euler operator, the diagonal operators Phi_i(a), and the double
// commutant of the Hecke and quantum group actions on V^{(x)p}.

#include <functional>
#include <stdexcept>

#include "qsw/uqgl.hpp"

namespace qsw {

/// All (j_1 <= ... <= j_p) with letters in 1..n.
std::vector<MultiIndex> monotone_indices(int n, int p);

/// Chain order inside each summand of the Euler operator.
enum class EulerOrder {
  // R(e_{j_1})..R(e_{j_p}) R(e*_{j_p})..R(e*_{j_1})
  Nested,
  // R(e_{j_p})..R(e_{j_1}) R(e*_{j_1})..R(e*_{j_p})
  Reversed,
};

OperatorExpr euler_chain(const MultiIndex& J, EulerOrder order);
/// Sum over monotone J of chain(J) / J!.
OperatorExpr euler_operator(int n, int p, EulerOrder order = EulerOrder::Nested);
XTensorElement euler_apply(const PlainTensor& x, int n, int p, EulerOrder order = EulerOrder::Nested);

/// Phi_i(a) = (q^a K_i - q^{-a} K_i^{-1}) / (q - q^{-1}).
OperatorExpr phi_operator(int i, int a);
/// Phi_i(0) Phi_i(-1) ... Phi_i(-m+1); the identity for m = 0.
OperatorExpr phi_falling(int i, int m);

/// Euler operator acts as the identity on every basis tensor, both orders.
Report verify_euler_identity(int n, int p_max);
/// The Phi evaluation rule, R(e_i)^m R(e*_i)^m = Phi_i^(m), the
/// intertwining Phi_i(a) R(e*_i) = R(e*_i) Phi_i(a-1), and the factorized
/// form of each Euler summand.
Report verify_phi_identities(int n, int p_max);

/// Raised when some [k], k <= p, vanishes at the chosen v0.
class DegeneracyError : public std::domain_error {
 public:
  DegeneracyError(int k, const std::string& what) : std::domain_error(what), k_(k) {}
  int k() const { return k_; }

 private:
  int k_;
};

/// Value of [k] at v0; replaceable so tests can force a zero.
using QIntEvaluator = std::function<Rational(int k, const Rational& v0)>;
Rational evaluate_q_int(int k, const Rational& v0);

/// Throws DegeneracyError naming the first k <= p with [k] = 0 at v0.
void require_generic(const Rational& v0, int p, const QIntEvaluator& eval = evaluate_q_int);

/// Basis of { X : X M = M X for every M }, all matrices d x d flattened.
std::vector<SparseVec> commutant(const std::vector<SparseVec>& mats, std::size_t d);

/// rho(t_r) on V^{(x)p}.
EndoMatrix rho_generator(int r, int n, int p);
/// Span of rho(T_w), w in S_p, at v0.
EchelonBasis hecke_image(int n, int p, const Rational& v0, const QIntEvaluator& eval = evaluate_q_int);

struct CommutantReport {
  int n = 0;
  int p = 0;
  Rational q0;
  std::size_t commutant_of_hecke = 0;
  std::size_t pi_image = 0;
  std::size_t hecke_image = 0;
  std::size_t commutant_of_pi = 0;
  bool pi_in_commutant_of_hecke = false;
  bool commutant_of_hecke_in_pi = false;
  bool hecke_in_commutant_of_pi = false;
  bool commutant_of_pi_in_hecke = false;
  std::vector<std::size_t> pi_dimension_trace;

  bool passed() const {
    return pi_in_commutant_of_hecke && commutant_of_hecke_in_pi && hecke_in_commutant_of_pi &&
           commutant_of_pi_in_hecke;
  }
  nlohmann::json to_json() const;
};

/// v0 is the positive square root of q0.
CommutantReport double_commutant(int n, int p, const Rational& v0, const QIntEvaluator& eval = evaluate_q_int);
Report verify_double_commutant(int n, int p, const Rational& v0, const QIntEvaluator& eval = evaluate_q_int);

}  // namespace qsw
