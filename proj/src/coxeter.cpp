#include "multiarr/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace multiarr {

RootSystem root_system(char type, size_t rank) {
  if (type != 'A' && type != 'D') throw std::invalid_argument(std::string("unsupported root system type ") + type);
  if (rank < 2) throw std::invalid_argument("root system rank must be at least 2");
  if (rank > 4) throw std::invalid_argument("root system rank above 4 is not supported");
  if (type == 'D' && rank != 4) throw std::invalid_argument("type D is supported for rank 4 only");

  std::vector<Hyperplane> hs;
  auto root = [&](size_t i, size_t j, int sj) {
    RatVector n(rank);
    n[i] = 1;
    if (j < rank) n[j] = sj;
    hs.push_back({std::move(n), 0});
  };
  if (type == 'A') {
    for (size_t i = 0; i <= rank; ++i)
      for (size_t j = i + 1; j <= rank; ++j) root(i, j, -1);
  } else {
    for (size_t i = 0; i < rank; ++i)
      for (size_t j = i + 1; j < rank; ++j) {
        root(i, j, -1);
        root(i, j, 1);
      }
  }
  RootSystem r;
  r.type = type;
  r.rank = rank;
  r.roots = Arrangement(rank, std::move(hs));
  const size_t twice = 2 * r.roots.size();
  if (twice % rank != 0) throw std::logic_error("Coxeter number is not an integer");
  r.h = static_cast<int>(twice / rank);
  return r;
}

Arrangement shi_catalan(const RootSystem& r, int k, Parity parity) {
  if (k < 1) throw std::invalid_argument("shi_catalan: k must be positive");
  const int c = 2 * k + (parity == Parity::Catalan ? 1 : 0);
  return extend(r.roots, PositiveSystem::identity(r.roots.size()), std::vector<int>(r.roots.size(), c));
}

std::vector<int> shifted_multiplicity(const std::vector<int>& m, int k, int sign) {
  std::vector<int> out;
  for (int v : m) out.push_back(2 * k + sign * v);
  return out;
}

namespace {

void check_zero_one(const RootSystem& r, const std::vector<int>& m) {
  if (m.size() != r.roots.size()) throw std::invalid_argument("multiplicity size does not match the root count");
  for (int v : m)
    if (v != 0 && v != 1) throw std::invalid_argument("multiplicity must be 0/1 valued");
}

Arrangement subarrangement(const RootSystem& r, const std::vector<int>& m) {
  std::vector<Hyperplane> hs;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] == 1) hs.push_back(r.roots[i]);
  return Arrangement(r.rank, std::move(hs));
}

std::optional<std::vector<int>> sub_exponents(const RootSystem& r, const std::vector<int>& m) {
  const auto cert = is_free_simple(subarrangement(r, m));
  if (!cert.is_free()) return std::nullopt;
  return cert.exponents();
}

std::vector<int> predicted(const RootSystem& r, const std::vector<int>& e, int k, int sign) {
  std::vector<int> out{1};
  for (int v : e) out.push_back(k * r.h + sign * v);
  std::sort(out.begin(), out.end());
  return out;
}

UniPoly decone_chi(const RootSystem& r, const std::vector<int>& mult) {
  return char_poly(decone_extension(r.roots, PositiveSystem::identity(r.roots.size()), mult)).poly;
}

UniPoly product_chi(const RootSystem& r, const std::vector<int>& e, int k, int sign) {
  std::vector<long> roots;
  for (int v : e) roots.push_back(static_cast<long>(k) * r.h + sign * v);
  return UniPoly::from_integer_roots(roots);
}

}  // namespace

std::vector<InterpolationRecord> enumerate_interpolations(const RootSystem& r, int k) {
  const size_t n = r.roots.size();
  if (n > 12) throw std::length_error("too many roots to enumerate");
  const PositiveSystem ps = PositiveSystem::identity(n);
  std::vector<InterpolationRecord> out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    std::vector<int> m(n);
    for (size_t i = 0; i < n; ++i) m[i] = static_cast<int>((bits >> (n - 1 - i)) & 1U);
    if (!condition_1ii(r.roots, ps, m)) continue;
    auto e = sub_exponents(r, m);
    if (!e) continue;
    InterpolationRecord rec;
    rec.m = m;
    rec.qualifies = true;
    rec.subarrangement_exponents = *e;
    rec.predicted_plus = predicted(r, *e, k, 1);
    rec.predicted_minus = predicted(r, *e, k, -1);
    out.push_back(std::move(rec));
  }
  return out;
}

bool functional_equation_check(const RootSystem& r, const std::vector<int>& m, int k) {
  check_zero_one(r, m);
  const UniPoly minus = decone_chi(r, shifted_multiplicity(m, k, -1));
  const UniPoly plus = decone_chi(r, shifted_multiplicity(m, k, 1));
  const Rational sign = (r.rank % 2 == 0) ? 1 : -1;
  return minus == plus.compose_affine(Rational(2 * k * r.h), Rational(-1)) * sign;
}

bool corollary_chi_check(const RootSystem& r, const std::vector<int>& m, int k) {
  check_zero_one(r, m);
  const auto e = sub_exponents(r, m);
  if (!e) throw std::invalid_argument("corollary_chi_check: subarrangement is not free");
  return decone_chi(r, shifted_multiplicity(m, k, 1)) == product_chi(r, *e, k, 1) &&
         decone_chi(r, shifted_multiplicity(m, k, -1)) == product_chi(r, *e, k, -1);
}

bool check_prop_ay(const RootSystem& r, const std::vector<int>& m, int k) {
  check_zero_one(r, m);
  const auto base = is_free_multi(Multiarrangement(r.roots, m));
  const auto plus = is_free_multi(Multiarrangement(r.roots, shifted_multiplicity(m, k, 1)));
  const auto minus = is_free_multi(Multiarrangement(r.roots, shifted_multiplicity(m, k, -1)));
  if (base.is_undetermined() || plus.is_undetermined() || minus.is_undetermined()) return false;
  if (!base.is_free()) return !plus.is_free() && !minus.is_free();
  if (!plus.is_free() || !minus.is_free()) return false;
  std::vector<int> ep, em;
  for (int e : base.exponents()) {
    ep.push_back(k * r.h + e);
    em.push_back(k * r.h - e);
  }
  std::sort(ep.begin(), ep.end());
  std::sort(em.begin(), em.end());
  return plus.exponents() == ep && minus.exponents() == em;
}

InterpolationRecord classify(const RootSystem& r, const std::vector<int>& m, int k) {
  check_zero_one(r, m);
  const PositiveSystem ps = PositiveSystem::identity(r.roots.size());
  InterpolationRecord rec;
  rec.m = m;
  const auto e = sub_exponents(r, m);
  if (e) {
    rec.subarrangement_exponents = *e;
    rec.predicted_plus = predicted(r, *e, k, 1);
    rec.predicted_minus = predicted(r, *e, k, -1);
  }
  rec.qualifies = e.has_value() && condition_1ii(r.roots, ps, m);
  rec.plus = extension_free(r.roots, ps, shifted_multiplicity(m, k, 1));
  rec.minus = extension_free(r.roots, ps, shifted_multiplicity(m, k, -1));
  rec.functional_equation = functional_equation_check(r, m, k);
  if (e) {
    rec.corollary_chi = decone_chi(r, shifted_multiplicity(m, k, 1)) == product_chi(r, *e, k, 1) &&
                        decone_chi(r, shifted_multiplicity(m, k, -1)) == product_chi(r, *e, k, -1);
  }
  if (rec.qualifies) {
    rec.equivalence_holds = rec.plus.is_free() && rec.minus.is_free() &&
                            rec.plus.exponents() == rec.predicted_plus &&
                            rec.minus.exponents() == rec.predicted_minus;
  } else {
    rec.equivalence_holds = rec.plus.is_nonfree() || rec.minus.is_nonfree();
  }
  return rec;
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MULTIARR_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<InterpolationRecord> interpolation_report(const RootSystem& r, const ReportOptions& opts) {
  const size_t n = r.roots.size();
  if (n > 20) throw std::length_error("too many roots to enumerate");
  const uint64_t space = uint64_t{1} << n;
  if (r.rank >= 4 && opts.sample == 0)
    throw std::length_error(r.label() + " has " + std::to_string(space) +
                            " multiplicities; rank 4 requires --sample");

  std::vector<uint64_t> codes;
  if (opts.sample == 0 || opts.sample >= space) {
    for (uint64_t b = 0; b < space; ++b) codes.push_back(b);
  } else {
    std::mt19937_64 gen(opts.seed);
    std::set<uint64_t> chosen;
    while (chosen.size() < opts.sample) chosen.insert(gen() % space);
    codes.assign(chosen.begin(), chosen.end());
  }
  std::vector<std::vector<int>> ms;
  for (uint64_t b : codes) {
    std::vector<int> m(n);
    for (size_t i = 0; i < n; ++i) m[i] = static_cast<int>((b >> (n - 1 - i)) & 1U);
    ms.push_back(std::move(m));
  }

  std::vector<InterpolationRecord> out(ms.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    for (size_t i = next++; i < ms.size(); i = next++) {
      try {
        out[i] = classify(r, ms[i], opts.k);
      } catch (...) {
        std::lock_guard<std::mutex> g(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<size_t>(worker_count(opts.threads), std::max<size_t>(1, ms.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.m < b.m; });
  return out;
}

}  // namespace multiarr
