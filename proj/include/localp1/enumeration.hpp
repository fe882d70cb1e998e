#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "localp1/sheaf_config.hpp"

namespace localp1 {

enum class Provenance { Enumerated, ClosedForm };

struct TypeCount {
  long long count = 0;
  bool enumerated = false;
  bool closed_form = false;
};

// Exact per-type counts keyed by (d, k, type string) with provenance.
// Counts must be nonnegative, and a key may carry both provenances only when
// the values agree.
class CountTable {
 public:
  void set(int d, int k, const std::string& type, long long count, Provenance prov);
  std::optional<TypeCount> get(int d, int k, const std::string& type) const;
  const std::map<std::tuple<int, int, std::string>, TypeCount>& entries() const { return m_; }
  long long sum_for(int d, int k) const;

 private:
  std::map<std::tuple<int, int, std::string>, TypeCount> m_;
};

// Fixed-sheaf counts per type.  `margin` widens every stability-derived
// degree window; any widening must leave the count unchanged (tested).
long long count_type_1d(int d, int k, int margin = 0);
long long count_type_n1(int n, int k, int margin = 0);
// Duality route: count_type_n1(n, k + n - 1).
long long count_type_1n(int n, int k);
// Independent direct route, for cross-validation.
long long count_type_1n_direct(int n, int k, int margin = 0);
long long count_type_n1d(int n, int chain, int k, int margin = 0);
long long count_type_1dn(int chain, int n, int k, int margin = 0);
long long count_type_121(int k, int margin = 0);
long long count_type_22(int k, int margin = 0);

// Two-sum closed form for the type (2,1) count, valid for k >= 1.
long long closed_form_n21(int k);

// All compositions of d, lexicographic.
std::vector<SheafType> compositions_of(int d);

// Count for an arbitrary composition of d <= 4 (single-row types with n >= 2
// contribute 0).
long long count_for_type(const SheafType& type, int k);

// Sum over all compositions of d; 1 <= d <= 4.
long long count_total(int d, int k);

// Per-type breakdown in composition order.
std::vector<std::pair<std::string, long long>> counts_by_type(int d, int k);

}  // namespace localp1
