#include "multiarr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace multiarr {

namespace {

RatVector augmented(const Hyperplane& h) {
  RatVector v = h.normal;
  v.push_back(h.constant);
  return v;
}

bool is_zero_vector(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

// Index of the entry with the largest absolute value (first on ties).
size_t dominant_coordinate(const RatVector& v) {
  size_t best = 0;
  for (size_t i = 1; i < v.size(); ++i)
    if (abs(v[i]) > abs(v[best])) best = i;
  return best;
}

RatVector to_rational(const std::vector<Integer>& z) {
  RatVector out;
  out.reserve(z.size());
  for (const auto& v : z) out.emplace_back(v);
  return out;
}

}  // namespace

bool Hyperplane::same_as(const Hyperplane& other) const {
  if (normal.size() != other.normal.size()) return false;
  return primitive_key() == other.primitive_key();
}

std::vector<Integer> Hyperplane::primitive_key() const {
  return primitive_integer_vector(augmented(*this));
}

Arrangement::Arrangement(size_t dim, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)) {
  std::set<std::vector<Integer>> seen;
  for (size_t i = 0; i < hyperplanes_.size(); ++i) {
    const auto& h = hyperplanes_[i];
    if (h.normal.size() != dim_)
      throw std::invalid_argument("hyperplane " + std::to_string(i) + " has wrong dimension");
    if (is_zero_vector(h.normal))
      throw std::invalid_argument("hyperplane " + std::to_string(i) + " has a zero normal");
    if (!seen.insert(h.primitive_key()).second)
      throw std::invalid_argument("hyperplane " + std::to_string(i) + " duplicates an earlier one");
  }
}

bool Arrangement::is_central() const {
  return std::all_of(hyperplanes_.begin(), hyperplanes_.end(),
                     [](const Hyperplane& h) { return h.is_central(); });
}

size_t Arrangement::rank() const {
  RowSpace rs(dim_);
  for (const auto& h : hyperplanes_) rs.add(h.normal);
  return rs.rank();
}

MultiPoly Arrangement::form(size_t i) const {
  return MultiPoly::linear_form(hyperplanes_.at(i).normal, -hyperplanes_.at(i).constant);
}

// ---------------------------------------------------------------- Multiarrangement

Multiarrangement::Multiarrangement(Arrangement a, std::vector<int> m)
    : base(std::move(a)), mult(std::move(m)) {
  if (mult.size() != base.size())
    throw std::invalid_argument("multiplicity list does not match the hyperplanes");
  if (!base.is_central()) throw std::invalid_argument("multiarrangements must be central");
  for (int v : mult)
    if (v < 0) throw std::invalid_argument("negative multiplicity");
}

Multiarrangement Multiarrangement::simple(Arrangement a) {
  std::vector<int> ones(a.size(), 1);
  return Multiarrangement(std::move(a), std::move(ones));
}

long Multiarrangement::total() const {
  long s = 0;
  for (int v : mult) s += v;
  return s;
}

MultiPoly Multiarrangement::defining_polynomial() const {
  MultiPoly q = MultiPoly::constant(dim(), 1);
  for (size_t i = 0; i < size(); ++i)
    if (mult[i] > 0) q = q * base.form(i).pow(static_cast<unsigned>(mult[i]));
  return q;
}

Multiarrangement Multiarrangement::support() const {
  std::vector<Hyperplane> hs;
  std::vector<int> ms;
  for (size_t i = 0; i < size(); ++i) {
    if (mult[i] == 0) continue;
    hs.push_back(base[i]);
    ms.push_back(mult[i]);
  }
  return Multiarrangement(Arrangement(dim(), std::move(hs)), std::move(ms));
}

// ---------------------------------------------------------------- flats

std::optional<Flat> flat_closure(const Arrangement& a, const std::vector<size_t>& indices) {
  RowSpace aug(a.dim() + 1), nor(a.dim());
  for (size_t i : indices) {
    aug.add(augmented(a[i]));
    nor.add(a[i].normal);
  }
  if (aug.rank() != nor.rank()) return std::nullopt;
  Flat f;
  f.codim = nor.rank();
  for (size_t i = 0; i < a.size(); ++i)
    if (aug.contains(augmented(a[i]))) f.indices.push_back(i);
  return f;
}

std::vector<RatVector> flat_subspace_basis(const Arrangement& a, const Flat& x) {
  std::vector<RatVector> rows;
  for (size_t i : x.indices) rows.push_back(a[i].normal);
  return nullspace_basis(RatMatrix::from_rows(rows, a.dim()));
}

namespace {

void require_flat(const Arrangement& a, const Flat& x) {
  for (size_t i : x.indices)
    if (i >= a.size()) throw std::invalid_argument("flat index out of range");
  if (!std::is_sorted(x.indices.begin(), x.indices.end()))
    throw std::invalid_argument("flat indices must be sorted");
  const auto closed = flat_closure(a, x.indices);
  if (!closed || closed->indices != x.indices || closed->codim != x.codim)
    throw std::invalid_argument("index set is not a flat of the arrangement");
}

}  // namespace

Arrangement localize(const Arrangement& a, const Flat& x) {
  require_flat(a, x);
  std::vector<Hyperplane> hs;
  for (size_t i : x.indices) hs.push_back(a[i]);
  return Arrangement(a.dim(), std::move(hs));
}

Multiarrangement localize(const Multiarrangement& a, const Flat& x) {
  Arrangement sub = localize(a.base, x);
  std::vector<int> ms;
  for (size_t i : x.indices) ms.push_back(a.mult[i]);
  return Multiarrangement(std::move(sub), std::move(ms));
}

// ---------------------------------------------------------------- restriction, cone

Multiarrangement ziegler_restrict(const Arrangement& b, size_t h0) {
  if (h0 >= b.size()) throw std::out_of_range("ziegler_restrict: hyperplane index out of range");
  if (!b.is_central()) throw std::invalid_argument("ziegler_restrict: arrangement must be central");
  const RatVector& a = b[h0].normal;
  const size_t p = dominant_coordinate(a);
  std::vector<std::vector<Integer>> keys;
  std::vector<int> counts;
  for (size_t i = 0; i < b.size(); ++i) {
    if (i == h0) continue;
    const RatVector& alpha = b[i].normal;
    RatVector beta;
    for (size_t j = 0; j < a.size(); ++j)
      if (j != p) beta.push_back(alpha[j] - alpha[p] * a[j] / a[p]);
    auto key = primitive_integer_vector(beta);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(std::move(key));
      counts.push_back(1);
    } else {
      ++counts[static_cast<size_t>(it - keys.begin())];
    }
  }
  std::vector<Hyperplane> hs;
  for (const auto& k : keys) hs.push_back({to_rational(k), 0});
  return Multiarrangement(Arrangement(b.dim() - 1, std::move(hs)), std::move(counts));
}

Arrangement cone(const Arrangement& a) {
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) {
    RatVector n = h.normal;
    n.push_back(-h.constant);
    hs.push_back({std::move(n), 0});
  }
  RatVector z(a.dim() + 1);
  z.back() = 1;
  hs.push_back({std::move(z), 0});
  return Arrangement(a.dim() + 1, std::move(hs));
}

Arrangement decone(const Arrangement& b, size_t h0) {
  if (h0 >= b.size()) throw std::out_of_range("decone: hyperplane index out of range");
  if (!b.is_central()) throw std::invalid_argument("decone: arrangement must be central");
  const RatVector& a = b[h0].normal;
  const size_t p = dominant_coordinate(a);
  std::vector<Hyperplane> hs;
  for (size_t i = 0; i < b.size(); ++i) {
    if (i == h0) continue;
    const RatVector& alpha = b[i].normal;
    Hyperplane h;
    for (size_t j = 0; j < a.size(); ++j)
      if (j != p) h.normal.push_back(alpha[j] - alpha[p] * a[j] / a[p]);
    h.constant = -alpha[p] / a[p];
    hs.push_back(std::move(h));
  }
  return Arrangement(b.dim() - 1, std::move(hs));
}

// ---------------------------------------------------------------- essentialize, product

Arrangement essentialize(const Arrangement& a) {
  if (!a.is_central()) throw std::invalid_argument("essentialize: arrangement must be central");
  RowSpace rs(a.dim());
  for (const auto& h : a.hyperplanes()) rs.add(h.normal);
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) {
    RatVector n;
    for (size_t p : rs.pivots()) n.push_back(h.normal[p]);
    hs.push_back({std::move(n), 0});
  }
  return Arrangement(rs.rank(), std::move(hs));
}

Multiarrangement essentialize(const Multiarrangement& a) {
  return Multiarrangement(essentialize(a.base), a.mult);
}

Arrangement direct_product(const Arrangement& a1, const Arrangement& a2) {
  const size_t d = a1.dim() + a2.dim();
  std::vector<Hyperplane> hs;
  for (const auto& h : a1.hyperplanes()) {
    RatVector n(d);
    std::copy(h.normal.begin(), h.normal.end(), n.begin());
    hs.push_back({std::move(n), h.constant});
  }
  for (const auto& h : a2.hyperplanes()) {
    RatVector n(d);
    std::copy(h.normal.begin(), h.normal.end(), n.begin() + static_cast<long>(a1.dim()));
    hs.push_back({std::move(n), h.constant});
  }
  return Arrangement(d, std::move(hs));
}

Arrangement transform(const Arrangement& a, const RatMatrix& g) {
  if (g.rows() != a.dim() || g.cols() != a.dim())
    throw std::invalid_argument("transform: matrix dimension mismatch");
  if (determinant(g) == 0) throw std::invalid_argument("transform: matrix is singular");
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) {
    RatVector n(a.dim());
    for (size_t j = 0; j < a.dim(); ++j)
      for (size_t i = 0; i < a.dim(); ++i) n[j] += g(i, j) * h.normal[i];
    hs.push_back({std::move(n), h.constant});
  }
  return Arrangement(a.dim(), std::move(hs));
}

}  // namespace multiarr
