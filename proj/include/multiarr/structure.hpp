#pragma once

#include "multiarr/arrangement.hpp"

#include <optional>
#include <vector>

namespace multiarr {

/// Per-hyperplane rescaling of the stored defining forms.
struct PositiveSystem {
  std::vector<Rational> scale;

  static PositiveSystem identity(size_t n) { return {std::vector<Rational>(n, Rational(1))}; }
  /// The arrangement with every form alpha_H replaced by scale_H * alpha_H.
  Arrangement apply(const Arrangement& a) const;
};

/// A codimension-two flat on exactly three hyperplanes, labeled so that
/// alpha_sum = alpha_left + alpha_right.
struct Triple {
  Flat flat;
  size_t sum = 0, left = 0, right = 0;
};

/// Codimension-two flats of a central arrangement, sorted.
std::vector<Flat> codim2_flats(const Arrangement& a);

/// Every codimension-two flat lies on at most three hyperplanes.
bool is_locally_A2(const Arrangement& a);

/// Labels a three-hyperplane flat by the sum relation its stored forms
/// satisfy, if any.
std::optional<Triple> sum_relation(const Arrangement& a, const Flat& x);

/// First three-hyperplane flat whose stored forms satisfy no sum relation.
std::optional<Flat> first_failing_triple(const Arrangement& a);

/// The labeled triples of a (stored forms must already form a positive system).
std::vector<Triple> positive_triples(const Arrangement& a);

/// Searches for rescalings making every full triple a sum relation. Prefers
/// the identity scaling when it already works. Throws std::invalid_argument
/// when a is not locally A2.
std::optional<PositiveSystem> find_positive_system(const Arrangement& a);

/// Stored forms satisfy a sum relation on every full triple.
bool is_positive_system(const Arrangement& a);

/// For every alpha_i = alpha_j + alpha_k with m_i odd, m_j or m_k is odd.
bool condition_star(const Arrangement& a, const PositiveSystem& ps, const std::vector<int>& m);

/// For {0,1}-valued m: alpha_1 = alpha_2 + alpha_3 and m_1 = 1 force m_2 = 1 or m_3 = 1.
bool condition_1ii(const Arrangement& a, const PositiveSystem& ps, const std::vector<int>& m);

/// Integers k with -(m-1)/2 <= k <= m/2, ascending.
std::vector<long> extension_levels(int m);

/// E(A,m): alpha_H - k z for each level k of m(H), then z = 0 last; the
/// rescaled forms are used verbatim.
Arrangement extend(const Arrangement& a, const PositiveSystem& ps, const std::vector<int>& m);
Arrangement extend(const Multiarrangement& am, const PositiveSystem& ps);

/// dE(A,m): the affine arrangement alpha_H = k.
Arrangement decone_extension(const Arrangement& a, const PositiveSystem& ps,
                             const std::vector<int>& m);
Arrangement decone_extension(const Multiarrangement& am, const PositiveSystem& ps);

}  // namespace multiarr
