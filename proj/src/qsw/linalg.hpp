#pragma once

// Exact sparse linear algebra over Q.

#include <cstddef>
#include <map>
#include <vector>

#include "qsw/scalar.hpp"

namespace qsw {

/// Sparse vector: column index -> nonzero rational.
using SparseVec = std::map<std::size_t, Rational>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a x

/// Row space kept in reduced row echelon form.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ncols = 0) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Remainder of v after elimination against the stored rows.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  /// Adds v to the span; returns false if it was already inside.
  bool insert(SparseVec v);

  /// Rows keyed by pivot column, each with pivot entry 1.
  const std::map<std::size_t, SparseVec>& rows() const { return rows_; }
  std::vector<std::size_t> free_columns() const;

 private:
  std::size_t ncols_;
  std::map<std::size_t, SparseVec> rows_;
};

/// Basis of { x : e . x = 0 for every e in equations }.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& equations, std::size_t ncols);

std::size_t rank_of(const std::vector<SparseVec>& vectors, std::size_t ncols);

/// True iff every vector of `inner` lies in the span of `outer`.
bool span_contains(const EchelonBasis& outer, const std::vector<SparseVec>& inner);

}  // namespace qsw
