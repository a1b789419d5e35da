#pragma once

#include "multiarr/arrangement.hpp"
#include "multiarr/lattice.hpp"
#include "multiarr/structure.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace multiarr {

/// A derivation sum_i f_i d/dx_i, stored as its coefficient polynomials.
using Derivation = std::vector<MultiPoly>;

/// Degree-d homogeneous piece of D(A,m) as the kernel of a linear system in
/// the coefficients of (f_1, ..., f_l).
struct GradedPiece {
  int degree = 0;
  size_t unknowns = 0;
  size_t dimension = 0;
  std::vector<Exponent> monomials;  // degree-d monomials, the coefficient order per f_i
};

/// dim D(A,m)_d. Each hyperplane contributes the conditions that
/// sum_i (d alpha_H / d x_i) f_i vanishes to order m(H) along H, written in
/// coordinates where alpha_H is a coordinate function.
size_t graded_dim(const Multiarrangement& am, int d);

/// A kernel basis of D(A,m)_d as derivations (primitive integer coefficients).
std::vector<Derivation> graded_basis(const Multiarrangement& am, int d);

/// Free-module prediction sum_i #{monomials of degree d - e_i}.
Integer predicted_dim(size_t nvars, const std::vector<int>& exponents, int d);

/// delta(alpha_H) is divisible by alpha_H^m(H) for every H, checked by exact
/// multivariate division.
bool in_derivation_module(const Multiarrangement& am, const Derivation& delta);

/// If b divides a, the exact quotient.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

// ------------------------------------------------------------ certificates

struct SaitoWitness {
  std::vector<Derivation> basis;  // ordered by degree
  Rational scalar;                // det(basis matrix) = scalar * Q(A,m)
};

struct HilbertMismatch {
  int degree = 0;
  std::vector<long> dims;  // dim D(A,m)_d for d = 0..degree
};
struct NonFactoringChi {
  UniPoly chi;
};
struct ExponentMismatch {
  std::vector<int> from_chi;
  std::vector<int> from_restriction;
};
struct NonFreeLocalization {
  Flat flat;           // flat of the base arrangement, original indices
  UniPoly localized_chi;  // chi of the extension localized at that flat
  std::string inner_kind;
};

using NonFreeWitness = std::variant<HilbertMismatch, NonFactoringChi, NonFreeLocalization, ExponentMismatch>;

struct Free {
  std::vector<int> exponents;  // ascending
  std::optional<SaitoWitness> saito;
};
struct NonFree {
  NonFreeWitness witness;
};
struct Undetermined {
  int cutoff = 0;
  std::string reason;
};

struct FreenessCertificate {
  std::variant<Free, NonFree, Undetermined> verdict;

  bool is_free() const { return std::holds_alternative<Free>(verdict); }
  bool is_nonfree() const { return std::holds_alternative<NonFree>(verdict); }
  bool is_undetermined() const { return std::holds_alternative<Undetermined>(verdict); }
  /// Exponents of a Free verdict; empty otherwise.
  std::vector<int> exponents() const;
  std::string verdict_name() const;
  std::string witness_kind() const;
};

struct FreenessOptions {
  /// Highest degree examined; negative means |m|.
  int cutoff = -1;
  /// Evaluation points tried per candidate when testing independence.
  int probe_points = 4;
  /// Degrees examined past the exponents when no basis is found there.
  int extra_degrees = 4;
};

/// Hilbert-function driven freeness test with a Saito determinant certificate.
FreenessCertificate is_free_multi(const Multiarrangement& am, const FreenessOptions& opts = {});
FreenessCertificate is_free_simple(const Arrangement& b, const FreenessOptions& opts = {});

/// Builds homogeneous derivations of the given degrees with det = c Q(A,m),
/// c != 0, or nothing when the greedy selection fails.
std::optional<SaitoWitness> saito_basis(const Multiarrangement& am, const std::vector<int>& exponents,
                                        int probe_points = 4);

/// Recomputes det(basis) and compares it with scalar * Q(A,m); also checks
/// membership of every basis element. Independent of how the basis was found.
bool verify_saito(const Multiarrangement& am, const SaitoWitness& w);

/// Exponents of a rank-two multiarrangement (sorted), from the graded
/// dimensions and validated by a Saito determinant. Throws for rank != 2.
std::array<int, 2> rank2_exponents(const Multiarrangement& am);

/// Closed-form exponents of x^a y^b (x+y)^c; a and b are sorted first.
std::array<int, 2> wakamiko_exponents(int a, int b, int c);

/// Closed-form chi of E(x^a y^b (x+y)^c) in three variables.
UniPoly lemma_rk2_charpoly(int a, int b, int c);

struct Rank3Options {
  bool attach_basis = false;
};

/// Freeness of a rank-three simple arrangement from chi and the exponents of
/// the Ziegler restriction onto its last hyperplane. Throws for rank != 3.
FreenessCertificate simple_rank3_free(const Arrangement& b, const Rank3Options& opts = {});

/// Freeness of E(A,m) by recursion over localizations: free with (1, e)
/// iff (A,m) is free with e and E(A_X, m|) is free for every flat X != 0.
/// Exponents are padded with zeros to dim + 1 entries.
FreenessCertificate extension_free(const Arrangement& a, const PositiveSystem& ps,
                                   const std::vector<int>& m, const FreenessOptions& opts = {});

struct ScanReport {
  size_t total = 0;
  size_t nonfree = 0;
  size_t undetermined = 0;
  std::vector<std::vector<int>> free_multiplicities;
};

/// Generic arrangement: every subset of at most dim normals is independent.
bool is_generic(const Arrangement& a);

/// Runs is_free_multi over every m with 1 <= m(H) <= max_mult. Throws when
/// dim < 3, |A| <= dim or A is not generic.
ScanReport totally_nonfree_scan(const Arrangement& a, int max_mult, const FreenessOptions& opts = {});

}  // namespace multiarr
