#include "qsw/uqgl.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qsw {

namespace {

std::size_t ipow(int n, int p) {
  std::size_t r = 1;
  for (int k = 0; k < p; ++k) r *= static_cast<std::size_t>(n);
  return r;
}

int multiplicity(const MultiIndex& J, int i) {
  int c = 0;
  for (auto j : J)
    if (j == i) ++c;
  return c;
}

}  // namespace

EndoMatrix::EndoMatrix(int n, int p) : n_(n), p_(p), size_(ipow(n, p)), entries_(size_ * size_) {
  if (n < 1 || p < 0) throw std::invalid_argument("EndoMatrix: need n >= 1 and p >= 0");
}

EndoMatrix EndoMatrix::identity(int n, int p) {
  EndoMatrix m(n, p);
  for (std::size_t k = 0; k < m.size_; ++k) m.at(k, k) = 1;
  return m;
}

EndoMatrix EndoMatrix::k_power(int i, int halfsteps, int n, int p) {
  if (i < 1 || i > n) throw DimensionError("K_i: index out of range");
  EndoMatrix m(n, p);
  for (std::size_t k = 0; k < m.size_; ++k)
    m.at(k, k) = RationalScalar::v_power(halfsteps * multiplicity(m.multiindex_at(k), i));
  return m;
}

std::size_t EndoMatrix::index_of(const MultiIndex& J) const {
  if (static_cast<int>(J.size()) != p_) throw DimensionError("multi-index has the wrong length");
  validate_multiindex(J, n_);
  std::size_t k = 0;
  for (auto j : J) k = k * static_cast<std::size_t>(n_) + (j - 1u);
  return k;
}

MultiIndex EndoMatrix::multiindex_at(std::size_t k) const {
  MultiIndex J(static_cast<std::size_t>(p_));
  for (int s = p_ - 1; s >= 0; --s) {
    J[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(k % static_cast<std::size_t>(n_) + 1);
    k /= static_cast<std::size_t>(n_);
  }
  return J;
}

PlainTensor EndoMatrix::column(const MultiIndex& J) const {
  const std::size_t c = index_of(J);
  PlainTensor out;
  for (std::size_t r = 0; r < size_; ++r)
    if (!at(r, c).is_zero()) out.emplace(multiindex_at(r), at(r, c));
  return out;
}

PlainTensor EndoMatrix::apply(const PlainTensor& x) const {
  PlainTensor out;
  for (const auto& [J, c] : x) {
    const std::size_t col = index_of(J);
    for (std::size_t r = 0; r < size_; ++r)
      if (!at(r, col).is_zero()) add_plain(out, multiindex_at(r), c * at(r, col));
  }
  return out;
}

bool EndoMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

EndoMatrix& EndoMatrix::operator+=(const EndoMatrix& o) {
  if (o.n_ != n_ || o.p_ != p_) throw DimensionError("matrix shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!o.entries_[k].is_zero()) entries_[k] += o.entries_[k];
  return *this;
}

EndoMatrix& EndoMatrix::operator-=(const EndoMatrix& o) {
  if (o.n_ != n_ || o.p_ != p_) throw DimensionError("matrix shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!o.entries_[k].is_zero()) entries_[k] -= o.entries_[k];
  return *this;
}

EndoMatrix& EndoMatrix::operator*=(const RationalScalar& c) {
  for (auto& e : entries_)
    if (!e.is_zero()) e *= c;
  return *this;
}

EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b) {
  if (a.n_ != b.n_ || a.p_ != b.p_) throw DimensionError("matrix shape mismatch");
  EndoMatrix out(a.n_, a.p_);
  const std::size_t d = a.size_;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      const RationalScalar& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c)
        if (!b.at(k, c).is_zero()) out.at(r, c) += x * b.at(k, c);
    }
  return out;
}

SparseVec EndoMatrix::specialize_flat(const Rational& v0) const {
  SparseVec out;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!entries_[k].is_zero()) {
      Rational x = specialize(entries_[k], v0);
      if (sgn(x) != 0) out.emplace(k, std::move(x));
    }
  return out;
}

std::string EndoMatrix::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < size_; ++c) {
    XTensorElement img(n_);
    for (std::size_t r = 0; r < size_; ++r)
      if (!at(r, c).is_zero()) img.add_raw(Permutation(), multiindex_at(r), at(r, c));
    if (img.is_zero()) continue;
    out += multiindex_to_string(multiindex_at(c)) + " -> " + img.to_string() + "\n";
  }
  return out.empty() ? "0" : out;
}

nlohmann::json EndoMatrix::to_json() const {
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t k = 0; k < size_; ++k) basis.push_back(multiindex_to_string(multiindex_at(k)));
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < size_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < size_; ++c) row.push_back(at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"n", n_}, {"p", p_}, {"basis", std::move(basis)}, {"rows", std::move(rows)}};
}

EndoMatrix plain_operator_matrix(int n, int p, const std::function<PlainTensor(const MultiIndex&)>& op) {
  EndoMatrix m(n, p);
  for (std::size_t c = 0; c < m.size(); ++c)
    for (const auto& [I, x] : op(m.multiindex_at(c))) m.at(m.index_of(I), c) += x;
  return m;
}

// ---------------------------------------------------------------------------

std::string UqGenerator::to_string() const {
  const std::string i = std::to_string(index);
  switch (kind) {
    case Kind::E:
      return "e" + i;
    case Kind::F:
      return "f" + i;
    case Kind::KHalf:
      return "k" + i + "^(1/2)";
    case Kind::KHalfInverse:
      return "k" + i + "^(-1/2)";
  }
  return "?";
}

void validate_generator(const UqGenerator& g, int n) {
  const bool ef = g.kind == UqGenerator::Kind::E || g.kind == UqGenerator::Kind::F;
  const int hi = ef ? n - 1 : n;
  if (g.index < 1 || g.index > hi)
    throw DimensionError("generator " + g.to_string() + " out of range for n = " + std::to_string(n));
}

EndoMatrix pi_generator(const UqGenerator& g, int n, int p) {
  validate_generator(g, n);
  const int i = g.index;
  switch (g.kind) {
    case UqGenerator::Kind::KHalf:
      return EndoMatrix::k_power(i, 1, n, p);
    case UqGenerator::Kind::KHalfInverse:
      return EndoMatrix::k_power(i, -1, n, p);
    case UqGenerator::Kind::E:
    case UqGenerator::Kind::F:
      break;
  }
  const bool raise = g.kind == UqGenerator::Kind::E;
  const int from = raise ? i + 1 : i;
  const int to = raise ? i : i + 1;
  auto weight = [i](int h) { return (h == i ? 1 : 0) - (h == i + 1 ? 1 : 0); };
  EndoMatrix m(n, p);
  for (std::size_t c = 0; c < m.size(); ++c) {
    const MultiIndex J = m.multiindex_at(c);
    for (int r = 0; r < p; ++r) {
      if (J[static_cast<std::size_t>(r)] != from) continue;
      int exponent = 0;
      for (int s = 0; s < r; ++s) exponent += weight(J[static_cast<std::size_t>(s)]);
      for (int s = r + 1; s < p; ++s) exponent -= weight(J[static_cast<std::size_t>(s)]);
      MultiIndex I = J;
      I[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>(to);
      m.at(m.index_of(I), c) += RationalScalar::v_power(exponent);
    }
  }
  return m;
}

EndoMatrix ehat_matrix(int i, int j, int n, int p, EhatSplit split) {
  if (i == j) throw std::invalid_argument("ehat_matrix: i = j is the diagonal L-operator case");
  if (i < 1 || j < 1 || i > n || j > n) throw DimensionError("ehat_matrix: index out of range");
  if (j == i + 1) return pi_generator({UqGenerator::Kind::E, i}, n, p);
  if (i == j + 1) return pi_generator({UqGenerator::Kind::F, j}, n, p);
  if (i < j) {
    const int mid = split == EhatSplit::Largest ? j - 1 : i + 1;
    const EndoMatrix a = ehat_matrix(i, mid, n, p, split), b = ehat_matrix(mid, j, n, p, split);
    return a * b - RationalScalar::q() * (b * a);
  }
  // i > j: E_ij = E_i,mid E_mid,j - q^{-1} E_mid,j E_i,mid with j < mid < i.
  const int mid = split == EhatSplit::Largest ? i - 1 : j + 1;
  const EndoMatrix a = ehat_matrix(i, mid, n, p, split), b = ehat_matrix(mid, j, n, p, split);
  return a * b - RationalScalar::q_power(-1) * (b * a);
}

EndoMatrix l_operator(int i, int j, const RationalScalar& a, int n, int p, EhatSplit split) {
  if (a.is_zero()) throw std::invalid_argument("l_operator: a must be nonzero");
  if (i < 1 || j < 1 || i > n || j > n) throw DimensionError("l_operator: index out of range");
  if (i == j) {
    EndoMatrix m = a * EndoMatrix::k_power(i, 2, n, p) - a.inverse() * EndoMatrix::k_power(i, -2, n, p);
    return RationalScalar::q_minus_qinv().inverse() * m;
  }
  const EndoMatrix e = ehat_matrix(i, j, n, p, split);
  if (i < j)
    return (a.inverse() * RationalScalar::v_power(1)) *
           (EndoMatrix::k_power(i, -1, n, p) * EndoMatrix::k_power(j, -1, n, p) * e);
  return (a * RationalScalar::v_power(-1)) * (EndoMatrix::k_power(i, 1, n, p) * EndoMatrix::k_power(j, 1, n, p) * e);
}

// ---------------------------------------------------------------------------

Report verify_uq_relations(int n, int p) {
  if (n < 1 || p < 0) throw std::invalid_argument("verify_uq_relations: need n >= 1, p >= 0");
  Report report;
  using K = UqGenerator::Kind;
  const std::string tag = "/n=" + std::to_string(n) + ",p=" + std::to_string(p);
  auto kh = [&](int i) { return pi_generator({K::KHalf, i}, n, p); };
  auto khi = [&](int i) { return pi_generator({K::KHalfInverse, i}, n, p); };
  auto e = [&](int i) { return pi_generator({K::E, i}, n, p); };
  auto f = [&](int i) { return pi_generator({K::F, i}, n, p); };
  const EndoMatrix one = EndoMatrix::identity(n, p);
  const EndoMatrix zero(n, p);
  auto idx = [](int i, int j) { return "/i=" + std::to_string(i) + ",j=" + std::to_string(j); };
  auto params = [&](int i, int j) { return nlohmann::json{{"n", n}, {"p", p}, {"i", i}, {"j", j}}; };

  for (int i = 1; i <= n; ++i) {
    check_equal<EndoMatrix>(report, "uq.k-inverse.left" + tag + "/i=" + std::to_string(i), params(i, i),
                            [&] { return kh(i) * khi(i); }, [&] { return one; });
    check_equal<EndoMatrix>(report, "uq.k-inverse.right" + tag + "/i=" + std::to_string(i), params(i, i),
                            [&] { return khi(i) * kh(i); }, [&] { return one; });
    for (int j = i + 1; j <= n; ++j)
      check_equal<EndoMatrix>(report, "uq.k-commute" + tag + idx(i, j), params(i, j),
                              [&] { return kh(i) * kh(j); }, [&] { return kh(j) * kh(i); });
    for (int j = 1; j < n; ++j) {
      const int d = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
      check_equal<EndoMatrix>(report, "uq.k-conjugate-e" + tag + idx(i, j), params(i, j),
                              [&] { return kh(i) * e(j) * khi(i); },
                              [&] { return RationalScalar::v_power(d) * e(j); });
      check_equal<EndoMatrix>(report, "uq.k-conjugate-f" + tag + idx(i, j), params(i, j),
                              [&] { return kh(i) * f(j) * khi(i); },
                              [&] { return RationalScalar::v_power(-d) * f(j); });
      check_equal<EndoMatrix>(report, "uq.kfull-conjugate-e" + tag + idx(i, j), params(i, j),
                              [&] { return kh(i) * kh(i) * e(j) * khi(i) * khi(i); },
                              [&] { return RationalScalar::q_power(d) * e(j); });
      check_equal<EndoMatrix>(report, "uq.kfull-conjugate-f" + tag + idx(i, j), params(i, j),
                              [&] { return kh(i) * kh(i) * f(j) * khi(i) * khi(i); },
                              [&] { return RationalScalar::q_power(-d) * f(j); });
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      check_equal<EndoMatrix>(
          report, "uq.ef-commutator" + tag + idx(i, j), params(i, j), [&] { return e(i) * f(j) - f(j) * e(i); },
          [&] {
            if (i != j) return zero;
            const EndoMatrix k = kh(i) * kh(i) * khi(i + 1) * khi(i + 1);
            const EndoMatrix kinv = khi(i) * khi(i) * kh(i + 1) * kh(i + 1);
            return RationalScalar::q_minus_qinv().inverse() * (k - kinv);
          });
      if (j > i + 1) {
        check_equal<EndoMatrix>(report, "uq.e-commute" + tag + idx(i, j), params(i, j),
                                [&] { return e(i) * e(j); }, [&] { return e(j) * e(i); });
        check_equal<EndoMatrix>(report, "uq.f-commute" + tag + idx(i, j), params(i, j),
                                [&] { return f(i) * f(j); }, [&] { return f(j) * f(i); });
      }
      if (j == i + 1 || j == i - 1) {
        const RationalScalar two = q_int(2);
        check_equal<EndoMatrix>(report, "uq.serre-e" + tag + idx(i, j), params(i, j),
                                [&] {
                                  const EndoMatrix a = e(i), b = e(j);
                                  return a * a * b - two * (a * b * a) + b * a * a;
                                },
                                [&] { return zero; });
        check_equal<EndoMatrix>(report, "uq.serre-f" + tag + idx(i, j), params(i, j),
                                [&] {
                                  const EndoMatrix a = f(i), b = f(j);
                                  return a * a * b - two * (a * b * a) + b * a * a;
                                },
                                [&] { return zero; });
      }
    }
  }
  return report;
}

RestrictionResult restrict_operator(const OperatorExpr& op, int n, int p) {
  RestrictionResult res;
  EndoMatrix m(n, p);
  for (std::size_t c = 0; c < m.size(); ++c) {
    const MultiIndex J = m.multiindex_at(c);
    const XTensorElement y = op(basis_tensor(J, n));
    for (const auto& [k, x] : y.terms()) {
      if (!k.w.is_identity() || k.degree() != p) {
        XTensorElement stray(n);
        stray.add_raw(k.w, k.J, x);
        res.offending_input = multiindex_to_string(J);
        res.stray_term = stray.to_string();
        return res;
      }
      m.at(m.index_of(k.J), c) += x;
    }
  }
  res.matrix = std::move(m);
  return res;
}

Report verify_l_operators(int n, int p) {
  if (n < 1 || p < 1) throw std::invalid_argument("verify_l_operators: need n >= 1, p >= 1");
  Report report;
  const std::string tag = "/n=" + std::to_string(n) + ",p=" + std::to_string(p);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const nlohmann::json params = {{"n", n}, {"p", p}, {"i", i}, {"j", j}};
      const std::string id = tag + "/i=" + std::to_string(i) + ",j=" + std::to_string(j);
      const RestrictionResult r =
          restrict_operator(OperatorExpr::mul_vector(i) * OperatorExpr::derivation(j), n, p);
      check_true(report, "loperator.restriction" + id, params, r.ok(),
                 r.ok() ? "" : "image of " + r.offending_input + " has stray term " + r.stray_term);
      if (!r.ok()) continue;
      check_equal<EndoMatrix>(report, "loperator" + id, params, [&] { return l_operator(i, j, 1, n, p); },
                              [&] { return *r.matrix; });
    }
  return report;
}

Report verify_triple_relations(int n, int p_max) {
  if (n < 1) throw std::invalid_argument("verify_triple_relations: n must be >= 1");
  using Op = OperatorExpr;
  auto E = [](int i) { return Op::mul_vector(i); };
  auto D = [](int i) { return Op::derivation(i); };
  const RationalScalar h = RationalScalar::q_minus_qinv();
  std::vector<OperatorRelation> rels;
  auto tag3 = [](int i, int j, int k) {
    return "/i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" + std::to_string(k);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        const nlohmann::json par = {{"i", i}, {"j", j}, {"k", k}};
        if ((i < j && i < k) || (i > j && i > k))
          rels.push_back({"triple.f1" + tag3(i, j, k), E(i) * E(j) * D(k), E(j) * D(k) * E(i), par});
        if (j < i && i < k)
          rels.push_back({"triple.f2" + tag3(i, j, k), E(i) * E(j) * D(k),
                          E(j) * D(k) * E(i) + h * (E(i) * D(k) * E(j)), par});
        if (j > i && i > k)
          rels.push_back({"triple.f2" + tag3(i, j, k), E(i) * E(j) * D(k),
                          E(j) * D(k) * E(i) - h * (E(i) * D(k) * E(j)), par});
      }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const nlohmann::json par = {{"i", i}, {"j", j}};
      const std::string t = "/i=" + std::to_string(i) + ",j=" + std::to_string(j);
      const int s = i < j ? 1 : -1;
      rels.push_back({"triple.f3" + t, E(i) * E(j) * D(i), E(j) * D(i) * E(i) - Op::k_power(i, 2 * s) * E(j), par});
      rels.push_back({"triple.f4" + t, E(i) * E(i) * D(j), RationalScalar::q_power(s) * (E(i) * D(j) * E(i)), par});
    }
    const nlohmann::json par = {{"i", i}};
    const std::string t = "/i=" + std::to_string(i);
    rels.push_back({"triple.f5a" + t, E(i) * E(i) * D(i),
                    RationalScalar::q() * (E(i) * D(i) * E(i)) - Op::k_power(i, 2) * E(i), par});
    rels.push_back({"triple.f5b" + t, E(i) * E(i) * D(i),
                    RationalScalar::q_power(-1) * (E(i) * D(i) * E(i)) - Op::k_power(i, -2) * E(i), par});
  }
  Report report;
  check_relations_on_slice(report, rels, n, p_max);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

// Rational matrix with sparse rows, used for the saturation products.
struct QSparseMatrix {
  std::size_t d = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
};

QSparseMatrix to_sparse(const SparseVec& flat, std::size_t d) {
  QSparseMatrix m;
  m.d = d;
  m.rows.resize(d);
  for (const auto& [k, c] : flat) m.rows[k / d].emplace_back(k % d, c);
  return m;
}

// Flattened (g * x) for a flattened x.
SparseVec left_multiply(const QSparseMatrix& g, const SparseVec& x) {
  const std::size_t d = g.d;
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> xrows(d);
  for (const auto& [k, c] : x) xrows[k / d].emplace_back(k % d, &c);
  SparseVec out;
  for (std::size_t r = 0; r < d; ++r)
    for (const auto& [k, a] : g.rows[r])
      for (const auto& [c, b] : xrows[k]) {
        auto [it, inserted] = out.try_emplace(r * d + c, a * *b);
        if (!inserted) {
          it->second += a * *b;
          if (sgn(it->second) == 0) out.erase(it);
        }
      }
  return out;
}

}  // namespace

SpanSaturation pi_image(int n, int p, const Rational& v0) {
  using K = UqGenerator::Kind;
  std::vector<UqGenerator> gens;
  for (int i = 1; i <= n; ++i) {
    gens.push_back({K::KHalf, i});
    gens.push_back({K::KHalfInverse, i});
  }
  for (int i = 1; i < n; ++i) {
    gens.push_back({K::E, i});
    gens.push_back({K::F, i});
  }
  const std::size_t d = ipow(n, p);
  std::vector<QSparseMatrix> gmats;
  for (const auto& g : gens) gmats.push_back(to_sparse(pi_generator(g, n, p).specialize_flat(v0), d));

  SpanSaturation out{EchelonBasis(d * d), {}};
  std::vector<SparseVec> frontier;
  SparseVec id;
  for (std::size_t k = 0; k < d; ++k) id.emplace(k * d + k, 1);
  out.basis.insert(id);
  frontier.push_back(id);
  out.dimension_trace.push_back(out.basis.rank());
  while (!frontier.empty()) {
    std::vector<SparseVec> next;
    for (const auto& x : frontier)
      for (const auto& g : gmats) {
        SparseVec y = left_multiply(g, x);
        if (out.basis.insert(y)) next.push_back(std::move(y));
      }
    frontier = std::move(next);
    if (!frontier.empty()) out.dimension_trace.push_back(out.basis.rank());
  }
  return out;
}

Report verify_chain_membership(const ChainMembershipConfig& cfg) {
  if (cfg.n < 1 || cfg.p < 1 || cfg.k_max < 0 || cfg.samples < 0)
    throw std::invalid_argument("verify_chain_membership: invalid configuration");
  Report report;
  const int n = cfg.n, p = cfg.p;
  const SpanSaturation image = pi_image(n, p, cfg.v0);
  const std::string tag = "/n=" + std::to_string(n) + ",p=" + std::to_string(p);
  nlohmann::json trace = nlohmann::json::array();
  for (auto dim : image.dimension_trace) trace.push_back(dim);
  report.artifacts().push_back({{"kind", "pi-image"}, {"n", n}, {"p", p}, {"v0", rational_to_string(cfg.v0)},
                                {"dimension", image.basis.rank()}, {"dimension_trace", trace}});
  {
    bool increasing = true;
    for (std::size_t k = 1; k < image.dimension_trace.size(); ++k)
      increasing = increasing && image.dimension_trace[k] > image.dimension_trace[k - 1];
    const std::size_t d = ipow(n, p);
    check_true(report, "membership.saturation" + tag, {{"n", n}, {"p", p}},
               increasing && image.basis.rank() <= d * d,
               "dimension " + std::to_string(image.basis.rank()));
  }
  check_true(report, "membership.member" + tag + "/k=0", {{"n", n}, {"p", p}, {"k", 0}},
             image.basis.contains(EndoMatrix::identity(n, p).specialize_flat(cfg.v0)));

  std::mt19937_64 rng(cfg.seed);
  auto random_vector = [&]() {
    std::vector<int> c(static_cast<std::size_t>(n));
    do {
      for (auto& x : c) x = static_cast<int>(rng() % 7) - 3;
    } while (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; }));
    return c;
  };
  for (int k = 1; k <= cfg.k_max; ++k) {
    for (int s = 0; s < cfg.samples; ++s) {
      std::vector<std::vector<int>> vs, ds;
      for (int t = 0; t < k; ++t) vs.push_back(random_vector());
      for (int t = 0; t < k; ++t) ds.push_back(random_vector());
      auto combo = [](const std::vector<int>& c, bool dual) {
        OperatorExpr sum;
        bool first = true;
        for (std::size_t a = 0; a < c.size(); ++a) {
          if (c[a] == 0) continue;
          const int i = static_cast<int>(a) + 1;
          OperatorExpr term = OperatorExpr::scale(c[a], dual ? OperatorExpr::derivation(i) : OperatorExpr::mul_vector(i));
          sum = first ? term : sum + term;
          first = false;
        }
        return sum;
      };
      // R(v_k) ... R(v_1) R(v*_1) ... R(v*_k)
      OperatorExpr chain;
      for (int t = k - 1; t >= 0; --t) chain = chain * combo(vs[static_cast<std::size_t>(t)], false);
      for (int t = 0; t < k; ++t) chain = chain * combo(ds[static_cast<std::size_t>(t)], true);
      const nlohmann::json params = {{"n", n}, {"p", p}, {"k", k}, {"v", vs}, {"vstar", ds}};
      const std::string id = "membership.member" + tag + "/k=" + std::to_string(k) + "/sample=" + std::to_string(s);
      const RestrictionResult r = restrict_operator(chain, n, p);
      if (!r.ok()) {
        check_true(report, id, params, false,
                   "image of " + r.offending_input + " has stray term " + r.stray_term);
        continue;
      }
      check_true(report, id, params, image.basis.contains(r.matrix->specialize_flat(cfg.v0)));
    }
  }
  return report;
}

}  // namespace qsw
