#pragma once

#include "multiarr/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace multiarr {

using Exponent = std::vector<int>;

// Graded lexicographic: total degree first, then lexicographic with x1 > x2 > ...
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

int total_degree(const Exponent& e);

/// All exponent vectors of total degree d in n variables, in ascending grlex
/// order. The position in the returned list is the monomial's index.
std::vector<Exponent> monomials_of_degree(size_t n, int d);

/// Number of monomials of degree d in n variables (0 for d < 0).
Integer monomial_count(size_t n, long d);

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit MultiPoly(size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(size_t nvars, const Rational& c);
  static MultiPoly variable(size_t nvars, size_t i);
  static MultiPoly monomial(const Exponent& e, const Rational& c = 1);
  /// sum_i coeffs[i] * x_i (+ constant)
  static MultiPoly linear_form(std::span<const Rational> coeffs, const Rational& constant = 0);

  size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; std::nullopt for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;
  /// Coefficient of the grlex-largest term (0 for the zero polynomial).
  Rational leading_coefficient() const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes polys[i] for x_i; all substitutes share one variable count.
  MultiPoly substitute(std::span<const MultiPoly> polys) const;

  /// Human-readable form using x,y,z,w for up to four variables, x1..xn otherwise.
  std::string to_string() const;

 private:
  size_t nvars_;
  TermMap terms_;
};

/// If b divides a exactly, returns the quotient c with a == b*c exactly, and
/// that c is a constant. Used to read off Saito determinant scalars.
std::optional<Rational> constant_ratio(const MultiPoly& a, const MultiPoly& b);

/// Dense univariate polynomial in t, coefficients low-to-high.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly t();
  /// prod (t - r)
  static UniPoly from_roots(std::span<const Rational> roots);
  static UniPoly from_integer_roots(std::span<const long> roots);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  Rational evaluate(const Rational& t) const;
  /// p(a + b t)
  UniPoly compose_affine(const Rational& a, const Rational& b) const;
  /// Quotient and remainder of division by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct IntegerRoots {
  std::vector<long> roots;  // ascending, with multiplicity
  UniPoly remainder;        // p == leading * prod(t - r) * remainder, remainder monic
  Rational leading;
};

/// Integer roots with multiplicity via a rational-root-theorem divisor scan.
/// Throws std::invalid_argument for the zero polynomial.
IntegerRoots integer_roots(const UniPoly& p);

/// "(t-1)(t-3)^2", with any non-factoring remainder appended in parentheses.
std::string factored_string(const UniPoly& p);

}  // namespace multiarr
