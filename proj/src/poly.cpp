#include "multiarr/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace multiarr {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

namespace {

void fill_monomials(size_t n, int d, size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= d; ++k) {
    cur[pos] = k;
    fill_monomials(n, d - k, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(size_t n, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(n, 0);
  fill_monomials(n, d, 0, cur, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

Integer monomial_count(size_t n, long d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(d + static_cast<long>(n) - 1),
               static_cast<unsigned long>(n - 1));
  return r;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t i) {
  if (i >= nvars) throw std::out_of_range("variable index");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::linear_form(std::span<const Rational> coeffs, const Rational& constant) {
  MultiPoly p(coeffs.size());
  Exponent e(coeffs.size(), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    e[i] = 1;
    p.add_term(e, coeffs[i]);
    e[i] = 0;
  }
  p.add_term(e, constant);
  return p;
}

std::optional<int> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r(a.nvars_);
  Exponent e(a.nvars_);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      r.add_term(e, prod);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point dimension mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= p;
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> polys) const {
  if (polys.size() != nvars_) throw std::invalid_argument("substitution arity mismatch");
  const size_t target = polys.empty() ? 0 : polys.front().nvars();
  // Powers are cached per variable; exponents in a single term are small.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power = [&](size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * polys[i]);
    return cache[static_cast<size_t>(k)];
  };
  MultiPoly result(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    result += term;
  }
  return result;
}

namespace {

std::string variable_name(size_t nvars, size_t i) {
  static const char* short_names[] = {"x", "y", "z", "w"};
  if (nvars <= 4) return short_names[i];
  return "x" + std::to_string(i + 1);
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = total_degree(e) == 0;
    bool need_sep = false;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      need_sep = true;
    }
    for (size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_sep) os << "*";
      os << variable_name(nvars_, i);
      if (e[i] > 1) os << "^" << e[i];
      need_sep = true;
    }
  }
  return os.str();
}

std::optional<Rational> constant_ratio(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Rational(0);
  Rational c = a.leading_coefficient() / b.leading_coefficient();
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  auto ia = a.terms().begin();
  for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ib, ++ia) {
    if (ia->first != ib->first || ia->second != c * ib->second) return std::nullopt;
  }
  return c;
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::t() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::from_roots(std::span<const Rational> roots) {
  UniPoly p = constant(1);
  for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
  return p;
}

UniPoly UniPoly::from_integer_roots(std::span<const long> roots) {
  std::vector<Rational> rs;
  for (long r : roots) rs.emplace_back(r);
  return from_roots(rs);
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& v : c_) v *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(r));
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
  const UniPoly lin({a, b});
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rational> rem = c_;
  const int dd = divisor.degree();
  const int n = degree();
  if (n < dd) return {UniPoly(), *this};
  std::vector<Rational> q(static_cast<size_t>(n - dd + 1));
  for (int i = n; i >= dd; --i) {
    Rational f = rem[static_cast<size_t>(i)] / divisor.leading();
    q[static_cast<size_t>(i - dd)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(i - dd + j)] -= f * divisor.c_[static_cast<size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) {
      if (is_integer(mag))
        os << mag.get_str();
      else
        os << "(" << mag.get_str() << ")";
    }
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------- roots

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Integer-coefficient copy of p (scaled by the common denominator).
std::vector<Integer> integer_coefficients(const UniPoly& p) {
  const Integer l = common_denominator(p.coeffs());
  std::vector<Integer> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
  return out;
}

}  // namespace

IntegerRoots integer_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
  IntegerRoots out;
  out.leading = p.leading();
  UniPoly rest = p * (Rational(1) / p.leading());
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    out.roots.push_back(0);
    rest = rest.divmod(UniPoly::t()).first;
  }
  if (rest.degree() > 0) {
    const auto ints = integer_coefficients(rest);
    std::vector<Integer> candidates;
    for (const auto& d : positive_divisors(ints.front())) {
      candidates.push_back(-d);
      candidates.push_back(d);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& r : candidates) {
      if (!r.fits_slong_p()) continue;
      const Rational rq(r);
      while (rest.degree() > 0 && rest.evaluate(rq) == 0) {
        out.roots.push_back(r.get_si());
        rest = rest.divmod(UniPoly({-rq, Rational(1)})).first;
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.remainder = rest;
  return out;
}

std::string factored_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  const auto fr = integer_roots(p);
  std::ostringstream os;
  if (fr.leading != 1) {
    if (fr.leading == -1)
      os << "-";
    else
      os << fr.leading.get_str();
  }
  bool any = false;
  for (size_t i = 0; i < fr.roots.size();) {
    size_t j = i;
    while (j < fr.roots.size() && fr.roots[j] == fr.roots[i]) ++j;
    const long r = fr.roots[i];
    if (r == 0)
      os << "t";
    else
      os << "(t" << (r > 0 ? "-" : "+") << (r > 0 ? r : -r) << ")";
    if (j - i > 1) os << "^" << (j - i);
    any = true;
    i = j;
  }
  if (fr.remainder.degree() > 0) {
    os << "(" << fr.remainder.to_string() << ")";
    any = true;
  }
  if (!any) os << (fr.leading == 1 || fr.leading == -1 ? "1" : "");
  return os.str();
}

}  // namespace multiarr
