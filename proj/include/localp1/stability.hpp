#pragma once

#include <vector>

#include "localp1/monomial.hpp"
#include "localp1/sheaf_config.hpp"

namespace localp1 {

// Stability tests for each shape of sheaf type, transcribing the per-type
// inequalities.  Twist rows are expected in the canonical non-increasing
// order; chi = 1 is a generation-side precondition and is not re-checked.

// Type (1,...,1): entries[j] is the map O(a[j]) -> O(a[j+1]) (x) O(k).
// Stable iff all entries are nonzero and every proper truncation from below
// has Euler characteristic >= 1.
bool stable_1d(int k, const std::vector<int>& a, const std::vector<Entry>& entries);

// Type (n,1): alphas[i] is the entry O(a[i]) -> O(b) (x) O(k).
bool stable_n1(int k, const std::vector<int>& a, int b, const std::vector<Entry>& alphas);

// Type (1,n): betas[i] is the entry O(c) -> O(d[i]) (x) O(k).
bool stable_1n(int k, int c, const std::vector<int>& d, const std::vector<Entry>& betas);

// Type (n,1,...,1): alphas feed the first chain row b[0]; chain[j] is the map
// O(b[j]) -> O(b[j+1]) (x) O(k).
bool stable_n1d(int k, const std::vector<int>& a, const std::vector<int>& b,
                const std::vector<Entry>& alphas, const std::vector<Entry>& chain);

// Type (1,...,1,n): chain along the c row twists, betas out of the last one.
bool stable_1dn(int k, const std::vector<int>& c, const std::vector<int>& d,
                const std::vector<Entry>& chain, const std::vector<Entry>& betas);

// Types (1,2,1) and (2,2); the stratum flag selects the extra degeneracy
// conditions that apply on the cycle-relation locus.
bool stable_121(const Stratum& s);
bool stable_22(const Stratum& s);

// Dispatch on the shape of s.config.type.  Throws for unsupported types.
bool stable(const Stratum& s);

}  // namespace localp1
