#pragma once

// Independent reference computations used only by the tests.

#include "multiarr/arrangement.hpp"
#include "multiarr/freeness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace multiarr;

// Plain Gaussian elimination, no pivoting heuristics shared with the library.
inline size_t dense_rank(std::vector<std::vector<Rational>> rows) {
  size_t r = 0;
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline MultiPoly leibniz_det(const std::vector<std::vector<MultiPoly>>& m) {
  const size_t n = m.size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det(n ? m[0][0].nvars() : 0);
  do {
    size_t inv = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    MultiPoly term = MultiPoly::constant(det.nvars(), inv % 2 ? -1 : 1);
    for (size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Parametrization x = sum_j u_j w_j + t v of a neighbourhood of H, with
// alpha_H(w_j) = 0 and alpha_H(v) = 1, as polynomials in (u_1.., t).
inline std::vector<MultiPoly> line_chart(const RatVector& a) {
  const size_t n = a.size();
  size_t p = 0;
  while (a[p] == 0) ++p;
  std::vector<MultiPoly> x(n, MultiPoly(n));
  size_t u = 0;
  for (size_t j = 0; j < n; ++j) {
    if (j == p) continue;
    x[j] += MultiPoly::variable(n, u);
    x[p] += MultiPoly::variable(n, u) * (-a[j] / a[p]);
    ++u;
  }
  x[p] += MultiPoly::variable(n, n - 1) * (1 / a[p]);
  return x;
}

// theta(alpha_H) vanishes to order m along H.
inline bool vanishes_to_order(const RatVector& a, int m, const std::vector<MultiPoly>& theta) {
  const size_t n = a.size();
  MultiPoly image(n);
  for (size_t i = 0; i < n; ++i)
    if (a[i] != 0) image += theta[i] * a[i];
  const auto chart = line_chart(a);
  const MultiPoly pulled = image.substitute(chart);
  for (const auto& [e, c] : pulled.terms())
    if (e[n - 1] < m && c != 0) return false;
  return true;
}

inline bool in_module(const Multiarrangement& am, const std::vector<MultiPoly>& theta) {
  for (size_t h = 0; h < am.size(); ++h)
    if (am.mult[h] > 0 && !vanishes_to_order(am.base[h].normal, am.mult[h], theta)) return false;
  return true;
}

inline size_t graded_dim(const Multiarrangement& am, int d) {
  const size_t n = am.dim();
  const auto monos = monomials_of_degree(n, d);
  const size_t unknowns = n * monos.size();
  std::vector<std::vector<Rational>> rows;
  for (size_t h = 0; h < am.size(); ++h) {
    const int m = am.mult[h];
    if (m == 0) continue;
    const auto& a = am.base[h].normal;
    const auto chart = line_chart(a);
    std::map<Exponent, std::vector<Rational>> eq;
    for (size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (size_t k = 0; k < monos.size(); ++k) {
        const MultiPoly pulled = MultiPoly::monomial(monos[k]).substitute(chart) * a[i];
        for (const auto& [e, c] : pulled.terms()) {
          if (e[n - 1] >= m) continue;
          auto& row = eq[e];
          if (row.empty()) row.assign(unknowns, Rational(0));
          row[i * monos.size() + k] += c;
        }
      }
    }
    for (auto& [e, row] : eq) rows.push_back(std::move(row));
  }
  return unknowns - dense_rank(std::move(rows));
}

inline long mod_reduce(const Rational& q, long p) {
  Integer num = q.get_num() % p, den = q.get_den() % p;
  if (num < 0) num += p;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Integer(p).get_mpz_t());
  return Integer((num * inv) % p).get_si();
}

// #{x in F_p^dim off every hyperplane}; equals chi(p) for primes of good reduction.
inline long point_count(const Arrangement& a, long p) {
  const size_t n = a.dim();
  std::vector<std::vector<long>> normals;
  std::vector<long> constants;
  for (const auto& h : a.hyperplanes()) {
    std::vector<long> v;
    for (const auto& c : h.normal) v.push_back(mod_reduce(c, p));
    normals.push_back(std::move(v));
    constants.push_back(mod_reduce(h.constant, p));
  }
  std::vector<long> x(n, 0);
  long count = 0;
  while (true) {
    bool off = true;
    for (size_t h = 0; h < normals.size() && off; ++h) {
      long s = 0;
      for (size_t i = 0; i < n; ++i) s += normals[h][i] * x[i];
      if ((s - constants[h]) % p == 0) off = false;
    }
    count += off;
    size_t pos = 0;
    while (pos < n && ++x[pos] == p) x[pos++] = 0;
    if (pos == n) break;
  }
  return count;
}

inline Hyperplane plane(std::vector<long> normal, long constant = 0) {
  Hyperplane h;
  for (long v : normal) h.normal.emplace_back(v);
  h.constant = constant;
  return h;
}

// Random arrangement with small integer primitive normals; affine when
// max_const > 0.
inline Arrangement random_arrangement(std::mt19937& gen, size_t dim, size_t count, long coeff, long max_const) {
  std::set<std::vector<Integer>> seen;
  std::vector<Hyperplane> hs;
  size_t guard = 0;
  while (hs.size() < count && ++guard < 10000) {
    RatVector n(dim);
    bool zero = true;
    for (auto& v : n) {
      v = static_cast<long>(gen() % (2 * coeff + 1)) - coeff;
      zero = zero && v == 0;
    }
    if (zero) continue;
    const auto prim = primitive_integer_vector(n);
    for (size_t i = 0; i < dim; ++i) n[i] = Rational(prim[i]);
    Hyperplane h{n, max_const ? Rational(static_cast<long>(gen() % (2 * max_const + 1)) - max_const) : Rational(0)};
    if (!seen.insert(h.primitive_key()).second) continue;
    hs.push_back(std::move(h));
  }
  return Arrangement(dim, std::move(hs));
}

}  // namespace oracle
