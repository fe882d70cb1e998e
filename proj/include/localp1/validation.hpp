#pragma once

#include <array>
#include <string>
#include <vector>

#include "localp1/enumeration.hpp"
#include "localp1/sheaf_config.hpp"

namespace localp1 {

// Four points on a projective line with linearization weights; equal labels
// mean coinciding points.  Models the middle-row geometry of the rank-1-image
// degenerations: the three inclusion lines and the quotient kernel.
struct FourPointConfig {
  std::array<int, 4> label{0, 1, 2, 3};
  std::array<int, 4> weight{2, 1, 1, 1};
};

// GIT stability: every coincidence class carries less than half the total
// weight.
bool git_stable(const FourPointConfig& cfg);

// Sheaf-side stability of the same configuration (points A, B, C, K): fails
// exactly when A=B, A=C, A=K, or B=C=K.
bool gieseker_config_stable(const FourPointConfig& cfg);

// All 15 set partitions of four labeled points, as label vectors.
std::vector<std::array<int, 4>> four_point_partitions();

struct ChiReportRow {
  std::string label;
  std::string config;   // canonical serialization of the stratum's config
  bool stable = false;
  int chi = 0;          // stratum chi times the stability indicator
};

struct ChiReport {
  std::vector<ChiReportRow> rows;
  int total = 0;

  // Same table in the CLI output formats.
  std::string to_json() const;
  std::string to_csv() const;
};

// Stratum-by-stratum Euler characteristic table for the two worked
// one-parameter families of type (1,2,1): k = 2 (the degenerate coefficient
// point stays stable) and k = 3 (it jumps to a different twist vector).
// Both totals come out to chi(P^1) = 2.
ChiReport component_chi_report(int k);

// Naive re-count of every type for d <= 3, k <= 6: full twist windows, all
// monomial tuples, the per-type stability predicates, and explicit orbit
// canonical forms.  No closed forms, no pruning.
CountTable brute_force_reference(int d, int k);

}  // namespace localp1
