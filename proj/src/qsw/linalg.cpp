#include "qsw/linalg.hpp"

#include <stdexcept>

namespace qsw {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (sgn(a) == 0) return;
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, a * c);
    if (!inserted) {
      it->second += a * c;
      if (sgn(it->second) == 0) y.erase(it);
    }
  }
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
  // Rows have zeros in every other pivot column, so one pass in pivot order suffices.
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational factor = -it->second;
    axpy(v, factor, row->second);
    it = v.upper_bound(col);
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  for (const auto& [k, c] : v)
    if (k >= ncols_) throw std::out_of_range("EchelonBasis: column out of range");
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.begin()->first;
  const Rational inv = 1 / Rational(v.begin()->second);
  for (auto& [k, c] : v) c *= inv;
  for (auto& [p, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit == row.end()) continue;
    const Rational factor = -hit->second;
    axpy(row, factor, v);
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (!rows_.count(c)) out.push_back(c);
  return out;
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& equations, std::size_t ncols) {
  EchelonBasis e(ncols);
  for (const auto& eq : equations) e.insert(eq);
  std::vector<SparseVec> out;
  for (std::size_t f : e.free_columns()) {
    SparseVec x;
    x[f] = 1;
    for (const auto& [p, row] : e.rows()) {
      auto hit = row.find(f);
      if (hit != row.end()) x[p] = -hit->second;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors, std::size_t ncols) {
  EchelonBasis e(ncols);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

bool span_contains(const EchelonBasis& outer, const std::vector<SparseVec>& inner) {
  for (const auto& v : inner)
    if (!outer.contains(v)) return false;
  return true;
}

}  // namespace qsw
