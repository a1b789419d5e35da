#include "multiarr/freeness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace multiarr {

namespace {

size_t dominant_coordinate(const RatVector& v) {
  size_t best = 0;
  for (size_t i = 1; i < v.size(); ++i)
    if (abs(v[i]) > abs(v[best])) best = i;
  return best;
}

// The degree-d linear system whose kernel is D(A,m)_d. Unknown (i, mu) is
// the coefficient of x^mu in f_i, at column i * M + index(mu).
struct DerivationSystem {
  size_t nvars = 0;
  int degree = 0;
  std::vector<Exponent> monomials;
  std::map<Exponent, uint32_t> index;
  SparseEchelon echelon{0};

  size_t unknowns() const { return nvars * monomials.size(); }
  size_t dimension() const { return echelon.nullity(); }
};

using RowMap = std::map<uint32_t, Rational>;

// Rows for one hyperplane: in coordinates y with y_p = alpha_H and y_j = x_j
// (j != p), x_p = y_p / a_p + L with L = -sum_{j != p} (a_j / a_p) y_j. The
// coefficient of every y-monomial with y_p-exponent < m must vanish.
void hyperplane_rows(const DerivationSystem& sys, const RatVector& a, int m,
                     std::vector<std::pair<size_t, RowMap>>& rows_out, size_t tag) {
  const size_t n = sys.nvars;
  const int d = sys.degree;
  const size_t p = dominant_coordinate(a);
  const uint32_t M = static_cast<uint32_t>(sys.monomials.size());

  RatVector lcoef(n);
  for (size_t j = 0; j < n; ++j)
    if (j != p) lcoef[j] = -a[j] / a[p];
  const MultiPoly L = MultiPoly::linear_form(lcoef);
  std::vector<MultiPoly> lpow{MultiPoly::constant(n, 1)};
  for (int r = 1; r <= d; ++r) lpow.push_back(lpow.back() * L);

  std::map<Exponent, RowMap, GrlexLess> rows;
  for (uint32_t col = 0; col < M; ++col) {
    const Exponent& mu = sys.monomials[col];
    const int mp = mu[p];
    Exponent rest = mu;
    rest[p] = 0;
    Rational ap_pow = 1;  // a_p^{-s}
    for (int s = 0; s <= std::min(mp, m - 1); ++s) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(mp), static_cast<unsigned long>(s));
      const Rational base = Rational(binom) * ap_pow;
      for (const auto& [le, lc] : lpow[static_cast<size_t>(mp - s)].terms()) {
        Exponent nu = le;
        for (size_t j = 0; j < n; ++j) nu[j] += rest[j];
        nu[p] = s;
        const Rational coef = base * lc;
        auto& row = rows[nu];
        for (size_t i = 0; i < n; ++i) {
          if (a[i] == 0) continue;
          const uint32_t c = static_cast<uint32_t>(i) * M + col;
          auto [it, ins] = row.try_emplace(c, a[i] * coef);
          if (!ins) it->second += a[i] * coef;
        }
      }
      ap_pow /= a[p];
    }
  }
  for (auto& [nu, row] : rows) {
    for (auto it = row.begin(); it != row.end();)
      it = (it->second == 0) ? row.erase(it) : std::next(it);
    if (!row.empty()) rows_out.emplace_back(tag, std::move(row));
  }
}

DerivationSystem build_system(const Multiarrangement& am, int d) {
  DerivationSystem sys;
  sys.nvars = am.dim();
  sys.degree = d;
  sys.monomials = monomials_of_degree(sys.nvars, d);
  for (uint32_t i = 0; i < sys.monomials.size(); ++i) sys.index.emplace(sys.monomials[i], i);
  sys.echelon = SparseEchelon(sys.unknowns());
  if (sys.monomials.empty()) return sys;

  std::vector<std::pair<size_t, RowMap>> rows;
  for (size_t h = 0; h < am.size(); ++h) {
    if (am.mult[h] == 0) continue;
    hyperplane_rows(sys, am.base[h].normal, am.mult[h], rows, h);
  }
  // Sparse rows first; ties keep generation order (deterministic).
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& x, const auto& y) { return x.second.size() < y.second.size(); });
  SparseEchelon::SparseRow sparse;
  for (const auto& [tag, row] : rows) {
    sparse.assign(row.begin(), row.end());
    sys.echelon.insert(sparse);
    if (sys.echelon.nullity() == 0) break;
  }
  return sys;
}

Derivation to_derivation(const DerivationSystem& sys, const RatVector& v) {
  const size_t M = sys.monomials.size();
  Derivation delta(sys.nvars, MultiPoly(sys.nvars));
  for (size_t i = 0; i < sys.nvars; ++i)
    for (size_t k = 0; k < M; ++k)
      if (v[i * M + k] != 0) delta[i].add_term(sys.monomials[k], v[i * M + k]);
  return delta;
}

// Points off every hyperplane, so a free basis stays independent at each.
std::vector<RatVector> probe_points(const Multiarrangement& am, int count) {
  // Raw mt19937 output keeps the points identical across standard libraries.
  std::mt19937 gen(20080131U);
  const size_t n = am.dim();
  std::vector<RatVector> pts;
  while (pts.size() < static_cast<size_t>(count)) {
    RatVector p(n);
    for (auto& v : p) v = static_cast<long>(gen() % 195U) - 97;
    bool off = true;
    for (const auto& h : am.base.hyperplanes()) {
      Rational s = 0;
      for (size_t i = 0; i < n; ++i) s += h.normal[i] * p[i];
      off = off && s != 0;
    }
    if (off) pts.push_back(std::move(p));
  }
  return pts;
}

// delta(P) for a coefficient vector, using precomputed monomial values at P.
RatVector evaluate_vector(const RatVector& v, size_t nvars, const std::vector<Rational>& mono_vals) {
  const size_t M = mono_vals.size();
  RatVector out(nvars);
  for (size_t i = 0; i < nvars; ++i)
    for (size_t k = 0; k < M; ++k)
      if (v[i * M + k] != 0) out[i] += v[i * M + k] * mono_vals[k];
  return out;
}

std::vector<Rational> monomial_values(const std::vector<Exponent>& monos, const RatVector& pt) {
  std::vector<Rational> vals;
  vals.reserve(monos.size());
  for (const auto& mu : monos) vals.push_back(MultiPoly::monomial(mu).evaluate(pt));
  return vals;
}

std::string describe_witness(const NonFreeWitness& w) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HilbertMismatch>) return "HilbertMismatch";
        if constexpr (std::is_same_v<T, NonFactoringChi>) return "NonFactoringChi";
        if constexpr (std::is_same_v<T, NonFreeLocalization>) return "NonFreeLocalization";
        if constexpr (std::is_same_v<T, ExponentMismatch>) return "ExponentMismatch";
      },
      w);
}

}  // namespace

// ------------------------------------------------------------ graded pieces

size_t graded_dim(const Multiarrangement& am, int d) {
  if (d < 0) throw std::invalid_argument("graded_dim: negative degree");
  return build_system(am, d).dimension();
}

std::vector<Derivation> graded_basis(const Multiarrangement& am, int d) {
  if (d < 0) throw std::invalid_argument("graded_basis: negative degree");
  const auto sys = build_system(am, d);
  std::vector<Derivation> out;
  for (const auto& v : sys.echelon.kernel()) out.push_back(to_derivation(sys, v));
  return out;
}

Integer predicted_dim(size_t nvars, const std::vector<int>& exponents, int d) {
  Integer s = 0;
  for (int e : exponents) s += monomial_count(nvars, d - e);
  return s;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [eb, cb] = *b.terms().rbegin();
  MultiPoly q(a.nvars()), r = a;
  while (!r.is_zero()) {
    const auto [er, cr] = *r.terms().rbegin();
    Exponent diff(er.size());
    for (size_t i = 0; i < er.size(); ++i) {
      diff[i] = er[i] - eb[i];
      if (diff[i] < 0) return std::nullopt;
    }
    const MultiPoly t = MultiPoly::monomial(diff, cr / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

bool in_derivation_module(const Multiarrangement& am, const Derivation& delta) {
  if (delta.size() != am.dim()) return false;
  for (size_t h = 0; h < am.size(); ++h) {
    if (am.mult[h] == 0) continue;
    MultiPoly image(am.dim());
    for (size_t i = 0; i < am.dim(); ++i)
      if (am.base[h].normal[i] != 0) image += delta[i] * am.base[h].normal[i];
    if (image.is_zero()) continue;
    const MultiPoly power = am.base.form(h).pow(static_cast<unsigned>(am.mult[h]));
    if (!exact_divide(image, power)) return false;
  }
  return true;
}

// ------------------------------------------------------------ certificates

std::vector<int> FreenessCertificate::exponents() const {
  if (const auto* f = std::get_if<Free>(&verdict)) return f->exponents;
  return {};
}

std::string FreenessCertificate::verdict_name() const {
  if (is_free()) return "Free";
  if (is_nonfree()) return "NonFree";
  return "Undetermined";
}

std::string FreenessCertificate::witness_kind() const {
  if (const auto* nf = std::get_if<NonFree>(&verdict)) return describe_witness(nf->witness);
  return "";
}

namespace {

std::optional<SaitoWitness> select_basis(const Multiarrangement& am, const std::vector<int>& exponents,
                                         std::map<int, DerivationSystem>& systems, int probe_count) {
  const size_t n = am.dim();
  if (exponents.size() != n) return std::nullopt;
  const auto points = probe_points(am, std::max(1, probe_count));
  std::vector<std::vector<RatVector>> selected_vals(points.size());  // per point
  std::vector<Derivation> basis;

  std::map<int, int> need;
  for (int e : exponents) ++need[e];
  for (const auto& [deg, count] : need) {
    auto it = systems.find(deg);
    if (it == systems.end()) it = systems.emplace(deg, build_system(am, deg)).first;
    const DerivationSystem& sys = it->second;
    std::vector<std::vector<Rational>> mono_vals;
    for (const auto& pt : points) mono_vals.push_back(monomial_values(sys.monomials, pt));
    int taken = 0;
    for (const auto& v : sys.echelon.kernel()) {
      if (taken == count) break;
      bool independent = false;
      std::vector<RatVector> vals;
      for (size_t k = 0; k < points.size(); ++k) {
        vals.push_back(evaluate_vector(v, n, mono_vals[k]));
        if (independent) continue;
        std::vector<RatVector> rows = selected_vals[k];
        rows.push_back(vals.back());
        if (rank(RatMatrix::from_rows(rows, n)) == rows.size()) independent = true;
      }
      if (!independent) continue;
      for (size_t k = 0; k < points.size(); ++k) selected_vals[k].push_back(vals[k]);
      basis.push_back(to_derivation(sys, v));
      ++taken;
    }
    if (taken < count) return std::nullopt;
  }

  PolyMatrix mat;
  for (const auto& delta : basis) mat.push_back(delta);
  const MultiPoly det = poly_det(mat);
  const auto c = constant_ratio(det, am.defining_polynomial());
  if (!c || *c == 0) return std::nullopt;
  return SaitoWitness{std::move(basis), *c};
}

}  // namespace

std::optional<SaitoWitness> saito_basis(const Multiarrangement& am, const std::vector<int>& exponents,
                                        int probe_points_count) {
  std::vector<int> sorted = exponents;
  std::sort(sorted.begin(), sorted.end());
  std::map<int, DerivationSystem> systems;
  return select_basis(am, sorted, systems, probe_points_count);
}

bool verify_saito(const Multiarrangement& am, const SaitoWitness& w) {
  if (w.basis.size() != am.dim() || w.scalar == 0) return false;
  for (const auto& delta : w.basis)
    if (!in_derivation_module(am, delta)) return false;
  PolyMatrix mat(w.basis.begin(), w.basis.end());
  return poly_det(mat) == am.defining_polynomial() * w.scalar;
}

FreenessCertificate is_free_multi(const Multiarrangement& am, const FreenessOptions& opts) {
  const size_t n = am.dim();
  const long total = am.total();
  const int cutoff = opts.cutoff < 0 ? static_cast<int>(total) : opts.cutoff;

  std::vector<int> found;
  std::vector<long> dims;
  std::map<int, DerivationSystem> systems;
  auto mismatch = [&](int d) { return FreenessCertificate{NonFree{HilbertMismatch{d, dims}}}; };

  for (int d = 0; d <= cutoff; ++d) {
    DerivationSystem sys = build_system(am, d);
    const long h = static_cast<long>(sys.dimension());
    dims.push_back(h);
    const Integer g = Integer(h) - predicted_dim(n, found, d);
    if (g < 0) return mismatch(d);
    if (g > 0) {
      if (found.size() + g.get_ui() > n) return mismatch(d);
      found.insert(found.end(), g.get_ui(), d);
      systems.emplace(d, std::move(sys));
    }
    const long sum = std::accumulate(found.begin(), found.end(), 0L);
    if (found.size() == n) {
      if (sum != total) return mismatch(d);
      break;
    }
    // Remaining exponents are all at least d + 1.
    if (sum + static_cast<long>(n - found.size()) * (d + 1) > total) return mismatch(d);
  }
  if (found.size() < n)
    return {Undetermined{cutoff, "exponents not determined up to the cutoff degree"}};

  auto w = select_basis(am, found, systems, opts.probe_points);
  if (!w) {
    // A free module would have its basis at these exponents; look for the
    // degree where the Hilbert function departs from them.
    const int last = static_cast<int>(dims.size()) - 1;
    for (int d = last + 1; d <= std::min(cutoff, last + opts.extra_degrees); ++d) {
      dims.push_back(static_cast<long>(graded_dim(am, d)));
      if (Integer(dims.back()) != predicted_dim(n, found, d)) return mismatch(d);
    }
    return {Undetermined{cutoff, "no Saito basis found at the Hilbert exponents"}};
  }
  return {Free{found, std::move(*w)}};
}

FreenessCertificate is_free_simple(const Arrangement& b, const FreenessOptions& opts) {
  return is_free_multi(Multiarrangement::simple(b), opts);
}

// ------------------------------------------------------------ rank two

std::array<int, 2> rank2_exponents(const Multiarrangement& am) {
  if (am.base.rank() != 2) throw std::invalid_argument("rank2_exponents: arrangement rank is not 2");
  const auto cert = is_free_multi(essentialize(am));
  if (!cert.is_free()) throw std::logic_error("rank-two multiarrangement reported " + cert.verdict_name());
  const auto e = cert.exponents();
  return {e[0], e[1]};
}

std::array<int, 2> wakamiko_exponents(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative multiplicity");
  if (a > b) std::swap(a, b);
  const int k = a + b + c;
  if (c < b - a + 1) return {b, a + c};
  if (c >= a + b + 1) return {c, a + b};
  return {k / 2, (k + 1) / 2};
}

UniPoly lemma_rk2_charpoly(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative multiplicity");
  if (a > b) std::swap(a, b);
  const int k = a + b + c;
  const UniPoly t_minus_1({Rational(-1), Rational(1)});
  auto lin = [](long r) { return UniPoly({Rational(-r), Rational(1)}); };
  if (c < b - a + 1) return t_minus_1 * lin(b) * lin(a + c);
  if (c >= a + b + 1) return t_minus_1 * lin(a + b) * lin(c);
  if (a % 2 == 0 && b % 2 == 0 && c % 2 == 1) {
    // (t - k/2)^2 + 3/4
    const Rational half(k, 2);
    const UniPoly quad({half * half + Rational(3, 4), -2 * half, Rational(1)});
    return t_minus_1 * quad;
  }
  return t_minus_1 * lin(k / 2) * lin((k + 1) / 2);
}

// ------------------------------------------------------------ rank three

FreenessCertificate simple_rank3_free(const Arrangement& b, const Rank3Options& opts) {
  if (!b.is_central()) throw std::invalid_argument("simple_rank3_free: arrangement must be central");
  if (b.rank() != 3) throw std::invalid_argument("simple_rank3_free: arrangement rank is not 3");
  const Arrangement ess = essentialize(b);
  const CharPoly chi = char_poly(ess);
  const auto roots = integer_roots(chi.poly);
  if (roots.remainder.degree() > 0 || roots.roots.size() != 3)
    return {NonFree{NonFactoringChi{chi.poly}}};
  std::vector<long> rs = roots.roots;
  auto one = std::find(rs.begin(), rs.end(), 1L);
  if (one == rs.end()) return {NonFree{NonFactoringChi{chi.poly}}};
  rs.erase(one);
  std::vector<int> from_chi{static_cast<int>(rs[0]), static_cast<int>(rs[1])};
  std::sort(from_chi.begin(), from_chi.end());

  const auto restricted = ziegler_restrict(ess, ess.size() - 1);
  const auto e = rank2_exponents(restricted);
  std::vector<int> from_restriction{e[0], e[1]};
  if (from_chi != from_restriction) return {NonFree{ExponentMismatch{from_chi, from_restriction}}};

  std::vector<int> exps{1, from_chi[0], from_chi[1]};
  exps.resize(b.dim(), 0);
  std::sort(exps.begin(), exps.end());
  Free f{exps, std::nullopt};
  if (opts.attach_basis) f.saito = saito_basis(Multiarrangement::simple(b), exps);
  return {std::move(f)};
}

// ------------------------------------------------------------ extensions

namespace {

struct ExtensionContext {
  FreenessOptions opts;
  std::map<std::vector<size_t>, FreenessCertificate> memo;
};

// ess: essential arrangement (forms already a positive system) with positive
// multiplicities; orig: original index of each hyperplane.
FreenessCertificate extension_core(const Arrangement& ess, const std::vector<int>& m,
                                   const std::vector<size_t>& orig, ExtensionContext& ctx) {
  const size_t r = ess.dim();
  if (r == 0) return {Free{{1}, std::nullopt}};
  if (r == 1) {
    std::vector<int> e{1, static_cast<int>(std::accumulate(m.begin(), m.end(), 0L))};
    std::sort(e.begin(), e.end());
    return {Free{e, std::nullopt}};
  }
  const PositiveSystem id = PositiveSystem::identity(ess.size());
  if (r == 2) return simple_rank3_free(extend(ess, id, m));

  const auto base = is_free_multi(Multiarrangement(ess, m), ctx.opts);
  if (!base.is_free()) return base;

  const auto poset = build_poset(ess);
  for (const auto& pf : poset.flats()) {
    const Flat& x = pf.flat;
    if (x.codim < 2 || x.codim >= r) continue;
    std::vector<size_t> key;
    for (size_t i : x.indices) key.push_back(orig[i]);
    auto hit = ctx.memo.find(key);
    FreenessCertificate local;
    Arrangement sub = essentialize(localize(ess, x));
    std::vector<int> sub_m;
    for (size_t i : x.indices) sub_m.push_back(m[i]);
    if (hit != ctx.memo.end()) {
      local = hit->second;
    } else {
      local = extension_core(sub, sub_m, key, ctx);
      ctx.memo.emplace(key, local);
    }
    if (local.is_undetermined()) return local;
    if (local.is_nonfree()) {
      const UniPoly chi =
          char_poly(extend(sub, PositiveSystem::identity(sub.size()), sub_m)).poly;
      return {NonFree{NonFreeLocalization{Flat{key, x.codim}, chi, local.witness_kind()}}};
    }
  }
  std::vector<int> e = base.exponents();
  e.push_back(1);
  std::sort(e.begin(), e.end());
  return {Free{e, std::nullopt}};
}

}  // namespace

FreenessCertificate extension_free(const Arrangement& a, const PositiveSystem& ps,
                                   const std::vector<int>& m, const FreenessOptions& opts) {
  if (m.size() != a.size()) throw std::invalid_argument("multiplicity size mismatch");
  if (!a.is_central()) throw std::invalid_argument("extension_free: arrangement must be central");
  if (!is_locally_A2(a)) throw std::invalid_argument("extension_free: arrangement is not locally A2");
  const Arrangement scaled = ps.apply(a);
  if (first_failing_triple(scaled))
    throw std::invalid_argument("extension_free: forms are not a positive system");

  std::vector<Hyperplane> hs;
  std::vector<int> sm;
  std::vector<size_t> orig;
  for (size_t i = 0; i < a.size(); ++i) {
    if (m[i] < 0) throw std::invalid_argument("negative multiplicity");
    if (m[i] == 0) continue;
    hs.push_back(scaled[i]);
    sm.push_back(m[i]);
    orig.push_back(i);
  }
  const Arrangement ess = essentialize(Arrangement(a.dim(), std::move(hs)));
  ExtensionContext ctx{opts, {}};
  FreenessCertificate cert = extension_core(ess, sm, orig, ctx);

  if (auto* f = std::get_if<Free>(&cert.verdict)) {
    f->exponents.resize(a.dim() + 1, 0);
    std::sort(f->exponents.begin(), f->exponents.end());
  }
  if (auto* nf = std::get_if<NonFree>(&cert.verdict)) {
    if (auto* loc = std::get_if<NonFreeLocalization>(&nf->witness)) {
      // Report the flat closed in the original arrangement.
      if (auto closed = flat_closure(a, loc->flat.indices)) loc->flat = *closed;
    }
  }
  return cert;
}

// ------------------------------------------------------------ generic scan

bool is_generic(const Arrangement& a) {
  const size_t n = a.size(), k = std::min(a.dim(), n);
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    RowSpace rs(a.dim());
    for (size_t i : idx) rs.add(a[i].normal);
    if (rs.rank() != k) return false;
    // Next k-combination in lexicographic order.
    size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

ScanReport totally_nonfree_scan(const Arrangement& a, int max_mult, const FreenessOptions& opts) {
  if (!a.is_central()) throw std::invalid_argument("totally_nonfree_scan: arrangement must be central");
  if (a.dim() < 3) throw std::invalid_argument("totally_nonfree_scan: needs dimension at least 3");
  if (a.size() <= a.dim()) throw std::invalid_argument("totally_nonfree_scan: needs more hyperplanes than the dimension");
  if (!is_generic(a)) throw std::invalid_argument("totally_nonfree_scan: arrangement is not generic");
  if (max_mult < 1) throw std::invalid_argument("totally_nonfree_scan: max_mult must be positive");
  ScanReport report;
  std::vector<int> m(a.size(), 1);
  while (true) {
    const auto cert = is_free_multi(Multiarrangement(a, m), opts);
    ++report.total;
    if (cert.is_free()) report.free_multiplicities.push_back(m);
    else if (cert.is_nonfree()) ++report.nonfree;
    else ++report.undetermined;
    size_t pos = m.size();
    while (pos > 0 && m[pos - 1] == max_mult) m[--pos] = 1;
    if (pos == 0) break;
    ++m[pos - 1];
  }
  return report;
}

}  // namespace multiarr
