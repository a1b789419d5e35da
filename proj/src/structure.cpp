#include "multiarr/structure.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <stdexcept>

namespace multiarr {

Arrangement PositiveSystem::apply(const Arrangement& a) const {
  if (scale.size() != a.size()) throw std::invalid_argument("positive system size mismatch");
  std::vector<Hyperplane> hs;
  for (size_t i = 0; i < a.size(); ++i) {
    if (scale[i] == 0) throw std::invalid_argument("positive system has a zero scaling");
    Hyperplane h = a[i];
    for (auto& v : h.normal) v *= scale[i];
    h.constant *= scale[i];
    hs.push_back(std::move(h));
  }
  return Arrangement(a.dim(), std::move(hs));
}

std::vector<Flat> codim2_flats(const Arrangement& a) {
  std::set<std::vector<size_t>> seen;
  std::vector<Flat> out;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) {
      auto f = flat_closure(a, {i, j});
      if (!f || f->codim != 2) continue;
      if (seen.insert(f->indices).second) out.push_back(std::move(*f));
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_locally_A2(const Arrangement& a) {
  for (const auto& f : codim2_flats(a))
    if (f.indices.size() > 3) return false;
  return true;
}

namespace {

bool is_sum(const RatVector& s, const RatVector& l, const RatVector& r) {
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] != l[i] + r[i]) return false;
  return true;
}

// lambda with sum lambda_i alpha_i = 0 for three forms spanning a plane.
std::array<Rational, 3> dependency(const Arrangement& a, const std::vector<size_t>& idx) {
  RatMatrix m(a.dim(), 3);
  for (size_t c = 0; c < 3; ++c)
    for (size_t r = 0; r < a.dim(); ++r) m(r, c) = a[idx[c]].normal[r];
  const auto ker = nullspace_basis(m);
  if (ker.size() != 1) throw std::logic_error("triple normals do not span a plane");
  return {ker[0][0], ker[0][1], ker[0][2]};
}

}  // namespace

std::optional<Triple> sum_relation(const Arrangement& a, const Flat& x) {
  if (x.indices.size() != 3) return std::nullopt;
  const auto& id = x.indices;
  for (size_t s = 0; s < 3; ++s) {
    const size_t l = (s + 1) % 3, r = (s + 2) % 3;
    const size_t lo = std::min(id[l], id[r]), hi = std::max(id[l], id[r]);
    if (is_sum(a[id[s]].normal, a[lo].normal, a[hi].normal)) return Triple{x, id[s], lo, hi};
  }
  return std::nullopt;
}

std::optional<Flat> first_failing_triple(const Arrangement& a) {
  for (const auto& f : codim2_flats(a))
    if (f.indices.size() == 3 && !sum_relation(a, f)) return f;
  return std::nullopt;
}

bool is_positive_system(const Arrangement& a) {
  return is_locally_A2(a) && !first_failing_triple(a);
}

std::vector<Triple> positive_triples(const Arrangement& a) {
  std::vector<Triple> out;
  for (const auto& f : codim2_flats(a)) {
    if (f.indices.size() != 3) continue;
    auto t = sum_relation(a, f);
    if (!t) throw std::invalid_argument("stored forms are not a positive system");
    out.push_back(*t);
  }
  return out;
}

namespace {

struct SearchState {
  std::vector<std::vector<size_t>> triples;
  std::vector<std::array<Rational, 3>> lambdas;
  std::vector<std::optional<Rational>> c;
};

// Labeling s makes member s the sum: c_x / c_s = -lambda_x / lambda_s for the
// other members x, and c_s / c_s = 1.
Rational ratio(const std::array<Rational, 3>& lam, size_t s, size_t x) {
  if (x == s) return 1;
  return -lam[x] / lam[s];
}

bool search(SearchState& st, size_t t) {
  if (t == st.triples.size()) return true;
  const auto& tri = st.triples[t];
  const auto& lam = st.lambdas[t];
  size_t ref = 3;
  for (size_t q = 0; q < 3; ++q)
    if (st.c[tri[q]]) {
      ref = q;
      break;
    }
  bool anchored_here = false;
  if (ref == 3) {
    // First triple of a new component; overall scale is free.
    ref = 0;
    st.c[tri[0]] = Rational(1);
    anchored_here = true;
  }
  for (size_t s = 0; s < 3; ++s) {
    // c_s from the reference member, then every member from c_s.
    const Rational cs = *st.c[tri[ref]] / ratio(lam, s, ref);
    std::array<Rational, 3> want;
    bool ok = true;
    for (size_t q = 0; q < 3 && ok; ++q) {
      want[q] = cs * ratio(lam, s, q);
      if (st.c[tri[q]] && *st.c[tri[q]] != want[q]) ok = false;
    }
    if (!ok) continue;
    std::vector<size_t> assigned;
    for (size_t q = 0; q < 3; ++q)
      if (!st.c[tri[q]]) {
        st.c[tri[q]] = want[q];
        assigned.push_back(tri[q]);
      }
    if (search(st, t + 1)) return true;
    for (size_t h : assigned) st.c[h].reset();
  }
  if (anchored_here) st.c[tri[0]].reset();
  return false;
}

}  // namespace

std::optional<PositiveSystem> find_positive_system(const Arrangement& a) {
  if (!a.is_central()) throw std::invalid_argument("find_positive_system: arrangement must be central");
  if (!is_locally_A2(a)) throw std::invalid_argument("find_positive_system: arrangement is not locally A2");
  if (!first_failing_triple(a)) return PositiveSystem::identity(a.size());

  std::vector<std::vector<size_t>> full;
  for (const auto& f : codim2_flats(a))
    if (f.indices.size() == 3) full.push_back(f.indices);

  // Breadth-first order so every triple after the first of its component
  // shares an already scaled hyperplane.
  SearchState st;
  std::vector<bool> used(full.size(), false);
  std::vector<bool> touched(a.size(), false);
  for (size_t start = 0; start < full.size(); ++start) {
    if (used[start]) continue;
    std::deque<size_t> queue{start};
    used[start] = true;
    while (!queue.empty()) {
      const size_t t = queue.front();
      queue.pop_front();
      st.triples.push_back(full[t]);
      for (size_t h : full[t]) touched[h] = true;
      for (size_t u = 0; u < full.size(); ++u) {
        if (used[u]) continue;
        bool shares = std::any_of(full[u].begin(), full[u].end(), [&](size_t h) { return touched[h]; });
        if (shares) {
          used[u] = true;
          queue.push_back(u);
        }
      }
    }
  }
  for (const auto& tri : st.triples) st.lambdas.push_back(dependency(a, tri));
  st.c.assign(a.size(), std::nullopt);
  if (!search(st, 0)) return std::nullopt;
  PositiveSystem ps;
  for (auto& v : st.c) ps.scale.push_back(v ? *v : Rational(1));
  return ps;
}

bool condition_star(const Arrangement& a, const PositiveSystem& ps, const std::vector<int>& m) {
  if (m.size() != a.size()) throw std::invalid_argument("multiplicity size mismatch");
  for (const auto& t : positive_triples(ps.apply(a))) {
    if (m[t.sum] % 2 == 1 && m[t.left] % 2 == 0 && m[t.right] % 2 == 0) return false;
  }
  return true;
}

bool condition_1ii(const Arrangement& a, const PositiveSystem& ps, const std::vector<int>& m) {
  if (m.size() != a.size()) throw std::invalid_argument("multiplicity size mismatch");
  for (int v : m)
    if (v != 0 && v != 1) throw std::invalid_argument("condition_1ii: multiplicity must be 0/1 valued");
  for (const auto& t : positive_triples(ps.apply(a))) {
    if (m[t.sum] == 1 && m[t.left] == 0 && m[t.right] == 0) return false;
  }
  return true;
}

std::vector<long> extension_levels(int m) {
  // Endpoints compared exactly as rationals: -(m-1)/2 <= k <= m/2.
  const Rational lo = make_rational(-(m - 1), 2), hi = make_rational(m, 2);
  Integer kmin, kmax;
  mpz_cdiv_q(kmin.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_fdiv_q(kmax.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  std::vector<long> ks;
  for (long k = kmin.get_si(); k <= kmax.get_si(); ++k) ks.push_back(k);
  return ks;
}

Arrangement extend(const Arrangement& a, const PositiveSystem& ps, const std::vector<int>& m) {
  if (m.size() != a.size()) throw std::invalid_argument("multiplicity size mismatch");
  if (!a.is_central()) throw std::invalid_argument("extend: arrangement must be central");
  const Arrangement scaled = ps.apply(a);
  std::vector<Hyperplane> hs;
  for (size_t i = 0; i < scaled.size(); ++i) {
    if (m[i] < 0) throw std::invalid_argument("negative multiplicity");
    for (long k : extension_levels(m[i])) {
      RatVector n = scaled[i].normal;
      n.emplace_back(-k);
      hs.push_back({std::move(n), 0});
    }
  }
  RatVector z(a.dim() + 1);
  z.back() = 1;
  hs.push_back({std::move(z), 0});
  return Arrangement(a.dim() + 1, std::move(hs));
}

Arrangement extend(const Multiarrangement& am, const PositiveSystem& ps) {
  return extend(am.base, ps, am.mult);
}

Arrangement decone_extension(const Arrangement& a, const PositiveSystem& ps,
                             const std::vector<int>& m) {
  if (m.size() != a.size()) throw std::invalid_argument("multiplicity size mismatch");
  const Arrangement scaled = ps.apply(a);
  std::vector<Hyperplane> hs;
  for (size_t i = 0; i < scaled.size(); ++i)
    for (long k : extension_levels(m[i])) hs.push_back({scaled[i].normal, Rational(k)});
  return Arrangement(a.dim(), std::move(hs));
}

Arrangement decone_extension(const Multiarrangement& am, const PositiveSystem& ps) {
  return decone_extension(am.base, ps, am.mult);
}

}  // namespace multiarr
