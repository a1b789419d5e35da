#pragma once

#include "multiarr/matrix.hpp"
#include "multiarr/poly.hpp"
#include "multiarr/rational.hpp"

#include <stdexcept>
#include <vector>

namespace multiarr {

/// An affine hyperplane {x : normal . x = constant}. The stored scaling of
/// the defining form is preserved verbatim; positive systems depend on it.
struct Hyperplane {
  RatVector normal;
  Rational constant = 0;

  bool is_central() const { return constant == 0; }
  /// Same affine hyperplane: (a, c) ~ (s a, s c) for some s != 0.
  bool same_as(const Hyperplane& other) const;
  /// Integer-primitive representative used for duplicate detection.
  std::vector<Integer> primitive_key() const;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

class Arrangement {
 public:
  Arrangement() = default;
  /// Throws std::invalid_argument for zero normals, wrong lengths or two
  /// hyperplanes describing the same affine hyperplane.
  Arrangement(size_t dim, std::vector<Hyperplane> hyperplanes);

  size_t dim() const { return dim_; }
  size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  const Hyperplane& operator[](size_t i) const { return hyperplanes_[i]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  bool is_central() const;
  /// Rank of the normal vectors.
  size_t rank() const;
  /// Linear (or affine, with the constant) form of hyperplane i as a polynomial.
  MultiPoly form(size_t i) const;
  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  size_t dim_ = 0;
  std::vector<Hyperplane> hyperplanes_;
};

struct Multiarrangement {
  Arrangement base;
  std::vector<int> mult;

  Multiarrangement() = default;
  /// Requires a central base and nonnegative multiplicities aligned with it.
  Multiarrangement(Arrangement a, std::vector<int> m);
  static Multiarrangement simple(Arrangement a);

  size_t dim() const { return base.dim(); }
  size_t size() const { return base.size(); }
  long total() const;
  /// Q(A,m) = prod alpha_H^m(H).
  MultiPoly defining_polynomial() const;
  /// Drops hyperplanes of multiplicity zero.
  Multiarrangement support() const;
  friend bool operator==(const Multiarrangement&, const Multiarrangement&) = default;
};

/// A flat is identified by its closed, sorted index set.
struct Flat {
  std::vector<size_t> indices;
  size_t codim = 0;
  friend bool operator==(const Flat&, const Flat&) = default;
  friend auto operator<=>(const Flat&, const Flat&) = default;
};

/// Closed index set of the intersection of the given hyperplanes, or an
/// empty optional when that intersection is empty (affine case).
std::optional<Flat> flat_closure(const Arrangement& a, const std::vector<size_t>& indices);
/// A basis of the linear subspace underlying a central flat.
std::vector<RatVector> flat_subspace_basis(const Arrangement& a, const Flat& x);

/// Throws std::invalid_argument when x is not a (closed) flat of a.
Arrangement localize(const Arrangement& a, const Flat& x);
Multiarrangement localize(const Multiarrangement& a, const Flat& x);

/// Restriction of a central arrangement to hyperplane h0 with its natural
/// multiplicity. Coordinates on h0 drop the entry of alpha_h0 with the largest
/// absolute value; restricted forms are integer-primitive.
Multiarrangement ziegler_restrict(const Arrangement& b, size_t h0);

/// alpha = c becomes alpha - c z = 0 in one more variable; z = 0 is appended last.
Arrangement cone(const Arrangement& a);
/// Sets alpha_h0 = 1 (eliminating the coordinate where alpha_h0 has the
/// largest absolute entry) and drops h0.
Arrangement decone(const Arrangement& b, size_t h0);

/// Quotient by the center: forms are rewritten in the coordinates of the
/// pivot columns of the reduced row space, which preserves linear relations
/// between forms.
Arrangement essentialize(const Arrangement& a);
Multiarrangement essentialize(const Multiarrangement& a);

Arrangement direct_product(const Arrangement& a1, const Arrangement& a2);

/// Applies an invertible linear change of coordinates x = g y to a central
/// arrangement: each normal a becomes g^T a.
Arrangement transform(const Arrangement& a, const RatMatrix& g);

}  // namespace multiarr
