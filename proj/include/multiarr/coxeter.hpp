#pragma once

#include "multiarr/freeness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace multiarr {

struct RootSystem {
  char type = 'A';
  size_t rank = 0;
  Arrangement roots;  // positive roots, essential coordinates
  int h = 0;

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

/// Type A uses e_i - e_j with x_{rank+1} = 0; type D uses e_i -/+ e_j.
/// Roots are listed pair by pair in lexicographic order. Rank is limited to 4.
RootSystem root_system(char type, size_t rank);

enum class Parity { Shi, Catalan };

/// E(A, 2k) (Shi) or E(A, 2k+1) (Catalan) over the positive roots.
Arrangement shi_catalan(const RootSystem& r, int k, Parity parity);

/// m + 2k or 2k - m entrywise.
std::vector<int> shifted_multiplicity(const std::vector<int>& m, int k, int sign);

struct InterpolationRecord {
  std::vector<int> m;
  bool qualifies = false;
  std::vector<int> subarrangement_exponents;  // empty when m^{-1}(1) is not free
  std::vector<int> predicted_plus, predicted_minus;
  FreenessCertificate plus, minus;
  bool functional_equation = false;
  bool corollary_chi = false;
  /// Qualifying: both sides Free with the predicted exponents. Otherwise at
  /// least one side NonFree.
  bool equivalence_holds = false;
};

/// Qualifying 0/1 multiplicities with predicted extension exponents (no
/// extension freeness computed).
std::vector<InterpolationRecord> enumerate_interpolations(const RootSystem& r, int k);

/// Full classification of one multiplicity.
InterpolationRecord classify(const RootSystem& r, const std::vector<int>& m, int k);

/// (A,m), (A,2k+m), (A,2k-m) are all free with exponents e, kh+e, kh-e, or
/// none of them is free.
bool check_prop_ay(const RootSystem& r, const std::vector<int>& m, int k);

/// chi(dE(2k-m), t) = (-1)^rank chi(dE(2k+m), 2kh - t).
bool functional_equation_check(const RootSystem& r, const std::vector<int>& m, int k);

/// chi(dE(2k +/- m), t) = prod (t - kh -/+ e_i). Throws unless m^{-1}(1) is free.
bool corollary_chi_check(const RootSystem& r, const std::vector<int>& m, int k);

struct ReportOptions {
  int k = 1;
  size_t sample = 0;  // 0: every multiplicity
  uint64_t seed = 1;
  unsigned threads = 0;  // 0: MULTIARR_THREADS or hardware concurrency
};

/// Classifies every (or a sampled set of) 0/1 multiplicity, sorted by m.
/// Rank 4 requires sampling.
std::vector<InterpolationRecord> interpolation_report(const RootSystem& r, const ReportOptions& opts);

unsigned worker_count(unsigned requested = 0);

}  // namespace multiarr
