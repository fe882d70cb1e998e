#pragma once

#include "localp1/sheaf_config.hpp"

namespace localp1::reference {

// Serial reference enumerator: walks every configuration of a type inside
// margin-widened degree windows, closes each one under the discrete
// isomorphisms (equal-twist swaps and entry-killing/reviving transvections),
// and counts each orbit once at its lex-min representative with the stability
// predicate required on every member.  Much slower than the production
// counters; kept for testing them.
long long count_type(const SheafType& type, int k);
long long count_total(int d, int k);

}  // namespace localp1::reference
