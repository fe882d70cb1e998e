#pragma once

#include <stdexcept>

namespace localp1 {

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

// floor/ceil division for possibly-negative numerators, b > 0
inline int floor_div(int a, int b) {
  int q = a / b;
  int r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

inline int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace localp1
