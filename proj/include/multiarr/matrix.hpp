#pragma once

#include "multiarr/poly.hpp"
#include "multiarr/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace multiarr {

using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix identity(size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  RatVector row(size_t r) const;
  RatVector multiply(const RatVector& v) const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

/// Gauss-Jordan with the first nonzero entry of each column (top-down) as pivot.
RrefResult rref(const RatMatrix& m);
size_t rank(const RatMatrix& m);

/// Kernel basis; one vector per free column, with that column set to 1.
std::vector<RatVector> nullspace_basis(const RatMatrix& m);

/// Bareiss fraction-free determinant (denominators cleared row-wise first).
Rational determinant(const RatMatrix& m);

/// Row space kept in reduced echelon form; supports membership tests.
class RowSpace {
 public:
  explicit RowSpace(size_t dim) : dim_(dim) {}
  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }
  const std::vector<RatVector>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  /// v minus its projection onto the span along pivot columns.
  RatVector reduce(RatVector v) const;
  bool contains(const RatVector& v) const;
  /// Adds v; returns false when it was already in the span.
  bool add(const RatVector& v);

 private:
  size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<size_t> pivots_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Exact determinant of a square polynomial matrix by Laplace expansion over
/// memoized column-subset minors.
MultiPoly poly_det(const PolyMatrix& m);

/// Incrementally built row-echelon form over Q with sparse rows normalized to
/// a unit pivot. Designed for the large, sparse systems behind D(A,m)_d.
class SparseEchelon {
 public:
  using Entry = std::pair<uint32_t, Rational>;
  using SparseRow = std::vector<Entry>;  // strictly increasing column indices

  explicit SparseEchelon(size_t cols);

  /// Reduces the row against the current pivots; returns true (and stores it)
  /// when it is independent of the rows inserted so far.
  bool insert(const SparseRow& row);
  size_t rank() const { return pivot_rows_.size(); }
  size_t cols() const { return cols_; }
  size_t nullity() const { return cols_ - rank(); }
  /// Kernel basis by back substitution, one vector per free column, scaled to
  /// primitive integers.
  std::vector<RatVector> kernel() const;

 private:
  size_t cols_;
  std::vector<SparseRow> pivot_rows_;  // pivot_rows_[i].front() is (pivot col, 1)
  std::vector<int32_t> row_of_col_;
  std::vector<Rational> acc_;
};

}  // namespace multiarr
