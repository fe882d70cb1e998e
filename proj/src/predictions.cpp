#include "localp1/predictions.hpp"

#include <stdexcept>
#include <vector>

#include "localp1/checked.hpp"

namespace localp1 {

namespace {

int parity_sign(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

long long to_ll(const __int128& v) {
  if (v > static_cast<__int128>(0x7fffffffffffffffLL) ||
      v < -static_cast<__int128>(0x7fffffffffffffffLL) - 1)
    throw std::overflow_error("closed form out of 64-bit range");
  return static_cast<long long>(v);
}

std::vector<int> divisors(int d) {
  std::vector<int> out;
  for (int m = 1; m <= d; ++m)
    if (d % m == 0) out.push_back(m);
  return out;
}

}  // namespace

long long bps_closed_form(int d, int k) {
  const __int128 K = k;
  switch (d) {
    case 1:
      return parity_sign(k + 1);
    case 2: {
      __int128 num = (k % 2 == 0) ? K * (K + 2) : (K + 1) * (K + 1);
      if (num % 4 != 0) throw std::logic_error("bad parity in quadratic form");
      return to_ll(-num / 4);
    }
    case 3: {
      __int128 num = K * (K + 1) * (K + 1) * (K + 2);
      if (num % 6 != 0) throw std::logic_error("bad divisibility in cubic form");
      return to_ll(parity_sign(k + 1) * (num / 6));
    }
    case 4: {
      __int128 num = K * (K + 1) * (K + 1) * (K + 2) * (2 * K * K + 4 * K + 1);
      if (num % 12 != 0) throw std::logic_error("bad divisibility in quartic form");
      return to_ll(-num / 12);
    }
    default:
      throw std::invalid_argument("bps_closed_form supports 1 <= d <= 4");
  }
}

std::pair<int, long long> sign_and_dimension(int d, int k) {
  const long long dim = static_cast<long long>(k) * d * d + 1;
  return {parity_sign(dim), dim};
}

long long bps_from_count(int d, int k, long long N) {
  if (N < 0) throw std::invalid_argument("negative fixed-point count");
  return checked_mul(sign_and_dimension(d, k).first, N);
}

Rational gv_sum(int d, const std::map<int, long long>& bps) {
  Rational total;
  for (int m : divisors(d)) {
    auto it = bps.find(d / m);
    if (it == bps.end())
      throw std::invalid_argument("gv_sum: missing divisor " + std::to_string(d / m));
    total += Rational(BigInt(it->second), BigInt(m) * m * m);
  }
  return total;
}

long long gv_invert(int d, const std::map<int, Rational>& gw) {
  std::map<int, Rational> n;
  for (int e : divisors(d)) {
    auto it = gw.find(e);
    if (it == gw.end()) throw std::invalid_argument("gv_invert: missing divisor " + std::to_string(e));
    Rational val = it->second;
    for (int m : divisors(e))
      if (m > 1) val -= n.at(e / m) / Rational(static_cast<long long>(m) * m * m);
    if (!val.is_integer()) throw std::domain_error("integrality violation at degree " + std::to_string(e));
    n[e] = val;
  }
  const BigInt result = n.at(d).to_integer();
  if (result > BigInt(0x7fffffffffffffffLL) || result < -BigInt(0x7fffffffffffffffLL) - 1)
    throw std::overflow_error("inverted value out of 64-bit range");
  return result.convert_to<long long>();
}

}  // namespace localp1
