#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "localp1/monomial.hpp"

namespace localp1 {

// Composition (d_0, ..., d_B) of the multiplicity d: the ranks of the rows.
struct SheafType {
  std::vector<int> rows;

  int degree() const;
  std::string str() const;  // "(1,2,1)"

  friend bool operator==(const SheafType&, const SheafType&) = default;
  friend auto operator<=>(const SheafType&, const SheafType&) = default;
};

// Combinatorial model of a torus-fixed sheaf: an integer k, per-row twists
// (non-increasing within each row) and monomial matrices between adjacent
// rows.  maps[j] is a rows[j+1] x rows[j] matrix; maps[j][t][s] is the entry
// O(twists[j][s]) -> O(twists[j+1][t]) twisted by O(k), either zero or a
// monomial of degree twists[j+1][t] - twists[j][s] + k.
struct ModuleConfig {
  int k = 0;
  SheafType type;
  std::vector<std::vector<int>> twists;
  std::vector<std::vector<std::vector<Entry>>> maps;

  int num_rows() const { return static_cast<int>(type.rows.size()); }
  int num_summands() const;
  int entry_degree(int gap, int target, int source) const;

  // Canonical text form, stable across runs; parse() inverts it.
  std::string str() const;
  static ModuleConfig parse(const std::string& text);

  friend bool operator==(const ModuleConfig&, const ModuleConfig&) = default;
  // Lexicographic; zero entries sort first, so the minimum of an isomorphism
  // orbit is the maximally-reduced representative.
  friend auto operator<=>(const ModuleConfig&, const ModuleConfig&) = default;
};

// Sum of (twist + 1) over all summands.
long long euler_char(const ModuleConfig& config);

// Degree of the kernel of (alpha1, alpha2): O(a1) + O(a2) -> O(b) (x) O(k).
int kernel_degree(int a1, int a2, int b, int k, const Entry& alpha1, const Entry& alpha2);

// Degree of the torsion-free cokernel of (beta1, beta2)^t:
// O(c) -> (O(d1) + O(d2)) (x) O(k).
int cokernel_degree(int c, int d1, int d2, int k, const Entry& beta1, const Entry& beta2);

using Character = std::array<int, 2>;

// One character per summand (rows flattened in order), pinned to (0,0) at the
// first summand; along every nonzero entry char(source) - char(target) equals
// the entry's exponent vector.  Returns nullopt when a cycle's exponent sums
// disagree.  Throws std::invalid_argument("decomposable configuration") when
// the entry graph does not connect all summands.
std::optional<std::vector<Character>> characters(const ModuleConfig& config);

// First Betti number of the bipartite graph of nonzero entries:
// #entries - #summands + #components.
int cycle_rank(const ModuleConfig& config);

enum class StratumFlag { Generic, CycleRelationVanishes };

// A locally closed piece of the fixed locus: discrete data plus the
// coefficient condition (generic coefficients, or the vanishing of the unique
// cycle relation).
struct Stratum {
  ModuleConfig config;
  StratumFlag flag = StratumFlag::Generic;
};

// False iff some equivariant transvection between two same-row summands can
// annihilate a nonzero entry outright, leaving strictly more zero entries.
// Such configs are discarded; their sheaves are counted at the more-reduced
// representative.  Requires consistent characters.
bool is_reduced(const ModuleConfig& config);

// Fixed by some non-identity permutation of equal-twist summands within rows.
bool swap_fixed(const ModuleConfig& config);

// Euler characteristic of the stratum's coefficient modulus, before the
// stability indicator: rigid configs give 1; a generic rank-1 cycle stratum
// gives -1 (0 when the config is swap-fixed, the modulus folding by u -> 1/u);
// the cycle-relation locus gives 1.  Throws for cycle rank >= 2.
int stratum_chi(const Stratum& s);

// Contribution with the stability indicator for the stratum's flag applied.
int stratum_chi(const Stratum& s, bool stable);

namespace detail {
// Images of the config under every non-identity permutation of equal-twist
// summands within rows (the discrete isomorphisms between representatives).
std::vector<ModuleConfig> swap_images(const ModuleConfig& config);
}  // namespace detail

}  // namespace localp1
