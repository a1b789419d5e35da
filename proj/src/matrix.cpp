#include "multiarr/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace multiarr {

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row(size_t r) const {
  return RatVector(data_.begin() + static_cast<long>(r * cols_),
                   data_.begin() + static_cast<long>((r + 1) * cols_));
}

RatVector RatMatrix::multiply(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  RatVector out(rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RrefResult rref(const RatMatrix& m) {
  RrefResult res{m, 0, {}};
  RatMatrix& a = res.reduced;
  size_t prow = 0;
  for (size_t col = 0; col < a.cols() && prow < a.rows(); ++col) {
    size_t sel = prow;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != prow)
      for (size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(prow, c));
    const Rational inv = 1 / a(prow, col);
    for (size_t c = col; c < a.cols(); ++c) a(prow, c) *= inv;
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == prow || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (size_t c = col; c < a.cols(); ++c)
        if (a(prow, c) != 0) a(r, c) -= f * a(prow, c);
    }
    res.pivots.push_back(col);
    ++prow;
  }
  res.rank = res.pivots.size();
  return res;
}

size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<RatVector> nullspace_basis(const RatMatrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return 1;
  // Clear denominators row by row; det(M) = det(Z) / prod(scale_i).
  std::vector<std::vector<Integer>> z(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (size_t r = 0; r < n; ++r) {
    const RatVector row = m.row(r);
    const Integer l = common_denominator(row);
    scale *= Rational(l);
    for (size_t c = 0; c < n; ++c) z[r][c] = row[c].get_num() * (l / row[c].get_den());
  }
  int sign = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (z[k][k] == 0) {
      size_t sel = k + 1;
      while (sel < n && z[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(z[k], z[sel]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        z[i][j] = z[i][j] * z[k][k] - z[i][k] * z[k][j];
        mpz_divexact(z[i][j].get_mpz_t(), z[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = z[k][k];
  }
  Rational det(z[n - 1][n - 1]);
  if (sign < 0) det = -det;
  return det / scale;
}

RatVector RowSpace::reduce(RatVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (size_t c = 0; c < dim_; ++c)
      if (rows_[i][c] != 0) v[c] -= f * rows_[i][c];
  }
  return v;
}

bool RowSpace::contains(const RatVector& v) const {
  const RatVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

bool RowSpace::add(const RatVector& v) {
  RatVector r = reduce(v);
  size_t p = 0;
  while (p < dim_ && r[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / r[p];
  for (auto& q : r) q *= inv;
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f == 0) continue;
    for (size_t c = 0; c < dim_; ++c)
      if (r[c] != 0) row[c] -= f * r[c];
  }
  // Keep rows ordered by pivot column.
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

MultiPoly poly_det(const PolyMatrix& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_det: matrix is not square");
  if (n == 0) return MultiPoly::constant(0, 1);
  const size_t nvars = m[0][0].nvars();
  for (const auto& row : m)
    for (const auto& p : row)
      if (p.nvars() != nvars) throw std::invalid_argument("poly_det: variable count mismatch");
  if (n > 20) throw std::invalid_argument("poly_det: matrix too large for subset expansion");

  // minor[mask] = det of rows (n - popcount(mask) .. n-1) and columns in mask.
  std::map<uint32_t, MultiPoly> minor;
  minor.emplace(0U, MultiPoly::constant(nvars, 1));
  for (size_t size = 1; size <= n; ++size) {
    const size_t row = n - size;
    std::map<uint32_t, MultiPoly> next;
    for (const auto& [mask, sub] : minor) {
      if (sub.is_zero()) continue;
      for (size_t c = 0; c < n; ++c) {
        if (mask & (1U << c)) continue;
        const uint32_t nm = mask | (1U << c);
        // Sign from the position of c among the columns of nm.
        int rank_in = 0;
        for (size_t c2 = 0; c2 < c; ++c2)
          if (nm & (1U << c2)) ++rank_in;
        if (m[row][c].is_zero()) continue;
        MultiPoly term = m[row][c] * sub;
        if (rank_in % 2) term = -term;
        auto [it, ins] = next.try_emplace(nm, MultiPoly(nvars));
        it->second += term;
      }
    }
    minor = std::move(next);
  }
  const uint32_t full = (1U << n) - 1U;
  auto it = minor.find(full);
  return it == minor.end() ? MultiPoly(nvars) : it->second;
}

// ---------------------------------------------------------------- SparseEchelon

SparseEchelon::SparseEchelon(size_t cols) : cols_(cols), row_of_col_(cols, -1), acc_(cols) {}

bool SparseEchelon::insert(const SparseRow& row) {
  if (row.empty()) return false;
  uint32_t lo = static_cast<uint32_t>(cols_), hi = 0;
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw std::out_of_range("SparseEchelon: column index");
    if (v == 0) continue;
    acc_[c] = v;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  if (lo == cols_) return false;
  // Sweep columns left to right; eliminations only create fill-in to the right.
  uint32_t pivot = static_cast<uint32_t>(cols_);
  for (uint32_t c = lo; c <= hi; ++c) {
    if (acc_[c] == 0) continue;
    const int32_t r = row_of_col_[c];
    if (r < 0) {
      if (pivot == cols_) pivot = c;
      continue;
    }
    const Rational f = acc_[c];
    for (const auto& [pc, pv] : pivot_rows_[static_cast<size_t>(r)]) {
      acc_[pc] -= f * pv;
      if (pc > hi) hi = pc;
    }
  }
  if (pivot == cols_) return false;
  SparseRow stored;
  const Rational inv = 1 / acc_[pivot];
  for (uint32_t c = pivot; c <= hi; ++c) {
    if (acc_[c] == 0) continue;
    stored.emplace_back(c, acc_[c] * inv);
    acc_[c] = 0;
  }
  row_of_col_[pivot] = static_cast<int32_t>(pivot_rows_.size());
  pivot_rows_.push_back(std::move(stored));
  return true;
}

std::vector<RatVector> SparseEchelon::kernel() const {
  std::vector<uint32_t> pivots_desc;
  for (size_t c = 0; c < cols_; ++c)
    if (row_of_col_[c] >= 0) pivots_desc.push_back(static_cast<uint32_t>(c));
  std::reverse(pivots_desc.begin(), pivots_desc.end());
  std::vector<RatVector> basis;
  for (size_t f = 0; f < cols_; ++f) {
    if (row_of_col_[f] >= 0) continue;
    RatVector x(cols_);
    x[f] = 1;
    for (uint32_t pc : pivots_desc) {
      if (pc > f) continue;  // rows pivoting right of f never see it
      const auto& prow = pivot_rows_[static_cast<size_t>(row_of_col_[pc])];
      Rational s = 0;
      for (size_t k = 1; k < prow.size(); ++k) {
        const auto& [c, v] = prow[k];
        if (x[c] != 0) s += v * x[c];
      }
      x[pc] = -s;
    }
    const auto ints = primitive_integer_vector(x);
    RatVector scaled;
    scaled.reserve(cols_);
    for (const auto& z : ints) scaled.emplace_back(z);
    basis.push_back(std::move(scaled));
  }
  return basis;
}

}  // namespace multiarr
