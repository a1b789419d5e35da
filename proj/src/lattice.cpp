#include "multiarr/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace multiarr {

std::vector<size_t> IntersectionPoset::of_codim(size_t c) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < flats_.size(); ++i)
    if (flats_[i].flat.codim == c) out.push_back(i);
  return out;
}

size_t IntersectionPoset::max_codim() const {
  size_t m = 0;
  for (const auto& f : flats_) m = std::max(m, f.flat.codim);
  return m;
}

namespace {

RatVector augmented(const Hyperplane& h) {
  RatVector v = h.normal;
  v.push_back(h.constant);
  return v;
}

}  // namespace

IntersectionPoset build_poset(const Arrangement& a) {
  IntersectionPoset poset;
  poset.dim_ = a.dim();
  std::vector<RatVector> aug;
  for (const auto& h : a.hyperplanes()) aug.push_back(augmented(h));

  std::vector<std::vector<Flat>> levels;
  levels.push_back({Flat{{}, 0}});
  while (true) {
    std::set<std::vector<size_t>> next_keys;
    std::vector<Flat> next;
    for (const auto& x : levels.back()) {
      RowSpace aug_span(a.dim() + 1), normal_span(a.dim());
      for (size_t i : x.indices) {
        aug_span.add(aug[i]);
        normal_span.add(a[i].normal);
      }
      for (size_t j = 0; j < a.size(); ++j) {
        if (std::binary_search(x.indices.begin(), x.indices.end(), j)) continue;
        RowSpace ag = aug_span, nm = normal_span;
        ag.add(aug[j]);
        nm.add(a[j].normal);
        if (ag.rank() != nm.rank()) continue;  // empty intersection
        Flat y;
        y.codim = nm.rank();
        for (size_t i = 0; i < a.size(); ++i)
          if (ag.contains(aug[i])) y.indices.push_back(i);
        if (next_keys.insert(y.indices).second) next.push_back(std::move(y));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }

  for (auto& level : levels)
    for (auto& f : level) poset.flats_.push_back({std::move(f), 0});

  // mu(V) = 1; mu(X) = -sum of mu(Y) over flats Y strictly containing X.
  auto& flats = poset.flats_;
  flats[0].mobius = 1;
  for (size_t i = 1; i < flats.size(); ++i) {
    Integer s = 0;
    const auto& xi = flats[i].flat.indices;
    for (size_t j = 0; j < i; ++j) {
      const auto& yj = flats[j].flat;
      if (yj.codim >= flats[i].flat.codim) break;
      if (std::includes(xi.begin(), xi.end(), yj.indices.begin(), yj.indices.end()))
        s += flats[j].mobius;
    }
    flats[i].mobius = -s;
  }

  poset.covers_.assign(flats.size(), {});
  for (size_t i = 0; i < flats.size(); ++i) {
    for (size_t j = i + 1; j < flats.size(); ++j) {
      if (flats[j].flat.codim < flats[i].flat.codim + 1) continue;
      if (flats[j].flat.codim > flats[i].flat.codim + 1) break;
      const auto& big = flats[j].flat.indices;
      const auto& small = flats[i].flat.indices;
      if (std::includes(big.begin(), big.end(), small.begin(), small.end()))
        poset.covers_[i].push_back(j);
    }
  }
  return poset;
}

CharPoly char_poly(const IntersectionPoset& poset) {
  std::vector<Rational> c(poset.dim() + 1);
  for (const auto& f : poset.flats()) c[poset.dim() - f.flat.codim] += Rational(f.mobius);
  return {UniPoly(std::move(c)), poset.dim()};
}

CharPoly char_poly(const Arrangement& a) { return char_poly(build_poset(a)); }

namespace {

void whitney_walk(const std::vector<RatVector>& aug, const std::vector<RatVector>& normals,
                  size_t next, size_t size, const RowSpace& ag, const RowSpace& nm,
                  std::vector<Integer>& coeff) {
  // The current subset (size, rank nm.rank()) is central by construction.
  if (size % 2)
    coeff[nm.rank()] -= 1;
  else
    coeff[nm.rank()] += 1;
  for (size_t j = next; j < aug.size(); ++j) {
    RowSpace ag2 = ag, nm2 = nm;
    ag2.add(aug[j]);
    nm2.add(normals[j]);
    if (ag2.rank() != nm2.rank()) continue;  // supersets stay empty
    whitney_walk(aug, normals, j + 1, size + 1, ag2, nm2, coeff);
  }
}

}  // namespace

CharPoly whitney_char_poly(const Arrangement& a) {
  if (a.size() > 20) throw std::invalid_argument("whitney_char_poly: more than 20 hyperplanes");
  std::vector<RatVector> aug, normals;
  for (const auto& h : a.hyperplanes()) {
    aug.push_back(augmented(h));
    normals.push_back(h.normal);
  }
  std::vector<Integer> by_rank(a.dim() + 1);
  whitney_walk(aug, normals, 0, 0, RowSpace(a.dim() + 1), RowSpace(a.dim()), by_rank);
  std::vector<Rational> c(a.dim() + 1);
  for (size_t r = 0; r <= a.dim(); ++r) c[a.dim() - r] = Rational(by_rank[r]);
  return {UniPoly(std::move(c)), a.dim()};
}

bool terao_check(const CharPoly& chi, std::span<const long> exponents) {
  return chi.poly == UniPoly::from_integer_roots(exponents);
}

}  // namespace multiarr
