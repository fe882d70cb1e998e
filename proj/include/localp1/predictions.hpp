#pragma once

#include <map>
#include <utility>

#include "localp1/rational.hpp"

namespace localp1 {

// Closed-form BPS invariant n_d(k) for 1 <= d <= 4, exact.
long long bps_closed_form(int d, int k);

// ((-1)^(k d^2 + 1), k d^2 + 1).
std::pair<int, long long> sign_and_dimension(int d, int k);

// Signed fixed-point count: sign(d, k) * N.
long long bps_from_count(int d, int k, long long N);

// Genus-zero Gromov-Witten invariant from the BPS values of the divisors of
// d: sum over m | d of bps[d/m] / m^3.
Rational gv_sum(int d, const std::map<int, long long>& bps);

// Inverse of gv_sum: recovers the degree-d BPS value from the Gromov-Witten
// values at all divisors of d; errors on a non-integral result.
long long gv_invert(int d, const std::map<int, Rational>& gw);

}  // namespace localp1
