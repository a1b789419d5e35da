#pragma once

#include "multiarr/arrangement.hpp"
#include "multiarr/poly.hpp"

#include <span>
#include <vector>

namespace multiarr {

struct PosetFlat {
  Flat flat;
  Integer mobius;
};

/// Intersection semilattice: all nonempty intersections, the ambient space
/// first (empty index set), then by codimension and index set.
class IntersectionPoset {
 public:
  size_t dim() const { return dim_; }
  const std::vector<PosetFlat>& flats() const { return flats_; }
  /// Flats of one codimension, as positions into flats().
  std::vector<size_t> of_codim(size_t c) const;
  /// covers()[i] lists the flats of codimension one higher that lie inside flat i.
  const std::vector<std::vector<size_t>>& covers() const { return covers_; }
  size_t max_codim() const;

 private:
  friend IntersectionPoset build_poset(const Arrangement& a);
  size_t dim_ = 0;
  std::vector<PosetFlat> flats_;
  std::vector<std::vector<size_t>> covers_;
};

/// Characteristic polynomial together with the ambient dimension it is taken in.
struct CharPoly {
  UniPoly poly;
  size_t dim = 0;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

IntersectionPoset build_poset(const Arrangement& a);

/// chi(A,t) = sum over flats of mu(X) t^dim(X).
CharPoly char_poly(const Arrangement& a);
CharPoly char_poly(const IntersectionPoset& poset);

/// Independent oracle: sum over subsets with nonempty intersection of
/// (-1)^|B| t^(dim - rank B). Refuses more than 20 hyperplanes.
CharPoly whitney_char_poly(const Arrangement& a);

/// True iff chi(t) == prod (t - e_i) exactly.
bool terao_check(const CharPoly& chi, std::span<const long> exponents);

}  // namespace multiarr
