#pragma once

// Degree-tuple windows shared by the production counters and the serial
// reference enumerator.  Every window is derived from the stability
// inequalities; `margin` widens the stability-derived bounds so that tests
// can assert boundary emptiness (widened windows must add zero accepted
// configurations).  Structural bounds (canonical sorted rows, fixed Euler
// characteristic, entry-degree monotonicity along a chain of nonzero maps)
// are never widened.

#include <algorithm>
#include <vector>

#include "localp1/checked.hpp"

namespace localp1::detail {

struct Rows121 {
  int a, b1, b2, c;
};

template <class F>
void tuples_121(int k, int margin, F&& f) {
  const int M = margin;
  const int a_hi = floor_div(3 * k - 4, 3);
  for (int a = -M; a <= a_hi + M; ++a) {
    const int b1_lo = a - k - M;
    const int b1_hi = floor_div(k - 2 + a, 2) + M;
    for (int b1 = b1_lo; b1 <= b1_hi; ++b1) {
      int b2_lo = std::max({-1 - a, -2 - a - b1, a - k - b1}) - M;
      int b2_hi = std::min(floor_div(k - 4 - a, 2) - b1, floor_div(k - 3 - a - b1, 2)) + M;
      b2_hi = std::min(b2_hi, b1);  // canonical order, not widened
      for (int b2 = b2_lo; b2 <= b2_hi; ++b2) f(Rows121{a, b1, b2, -3 - a - b1 - b2});
    }
  }
}

struct Rows22 {
  int a1, a2, b1, b2;
};

template <class F>
void tuples_22(int k, int margin, F&& f) {
  const int M = margin;
  for (int b2 = ceil_div(-(k + 1), 2) - M; b2 <= -1 + M; ++b2) {
    for (int b1 = b2; b1 <= -1 + M; ++b1) {
      const int s = -3 - b1 - b2;  // a1 + a2
      const int a1_lo = ceil_div(s, 2);
      const int a1_hi = std::min({s, b2 + k, floor_div(k - 2, 2)}) + M;
      for (int a1 = a1_lo; a1 <= a1_hi; ++a1) f(Rows22{a1, s - a1, b1, b2});
    }
  }
}

// Type (1^d): passes the non-decreasing lambda vector (lambda_j = a_j + j*k).
template <class F>
void tuples_1d(int d, int k, int margin, F&& f) {
  const long long S = static_cast<long long>(d) * (d - 1) / 2 * k - (d - 1);
  std::vector<long long> lambda(d);
  auto rec = [&](auto&& self, int i, long long prev, long long rem) -> void {
    if (i == d - 1) {
      if (rem >= prev) {
        lambda[i] = rem;
        f(lambda);
      }
      return;
    }
    for (long long v = prev; v * (d - i) <= rem; ++v) {
      lambda[i] = v;
      self(self, i + 1, v, rem - v);
    }
  };
  if (d == 1) {
    if (S == 0) {
      lambda[0] = 0;
      f(lambda);
    }
    return;
  }
  rec(rec, 0, -static_cast<long long>(margin), S);
}

struct RowsN1 {
  std::vector<int> a;  // non-increasing
  int b;
};

template <class F>
void tuples_n1(int n, int k, int margin, F&& f) {
  const int M = margin;
  RowsN1 t;
  t.a.resize(n);
  if (n == 2) {
    // r = 2b + k + 1 >= 0 bounds b below; a_i >= 0 gives b <= -2.
    for (int b = ceil_div(-(k + 1), 2) - M; b <= -2 + M; ++b) {
      int s = -2 - b;
      for (int a1 = ceil_div(s, 2); a1 <= s + M; ++a1) {
        t.a = {a1, s - a1};
        t.b = b;
        f(t);
      }
    }
    return;
  }
  if (n == 3) {
    // r_12 >= 0 forces sum(a) + a1 + a2 <= k - 4.
    for (int a1 = -M; 2 * a1 <= k - 4 + 3 * M; ++a1)
      for (int a2 = -M; a2 <= a1; ++a2)
        for (int a3 = -M; a3 <= a2; ++a3) {
          if (a1 + a2 + a3 + a1 + a2 > k - 4 + 2 * M) continue;
          t.a = {a1, a2, a3};
          t.b = -3 - a1 - a2 - a3;
          f(t);
        }
    return;
  }
  throw std::invalid_argument("tuples_n1: n out of supported range");
}

struct Rows1N {
  int c;
  std::vector<int> d;  // non-increasing
};

template <class F>
void tuples_1n(int n, int k, int margin, F&& f) {
  const int M = margin;
  Rows1N t;
  t.d.resize(n);
  if (n == 2) {
    // r = 2(d1 + d2) + 2 + k >= 0
    for (int d1 = ceil_div(-(k + 2), 4) - M; d1 <= -1 + M; ++d1)
      for (int d2 = ceil_div(-(k + 2), 2) - d1 - M; d2 <= d1; ++d2) {
        t.c = -2 - d1 - d2;
        t.d = {d1, d2};
        f(t);
      }
    return;
  }
  if (n == 3) {
    // r_23 = 2(d2 + d3) + d1 + 3 + k >= 0 and d_i <= -1
    for (int d1 = -(2 * k + 6) - M; d1 <= -1 + M; ++d1)
      for (int d2 = -(2 * k + 6) - M; d2 <= d1; ++d2)
        for (int d3 = ceil_div(-3 - k - d1, 2) - d2 - M; d3 <= d2; ++d3) {
          t.c = -3 - d1 - d2 - d3;
          t.d = {d1, d2, d3};
          f(t);
        }
    return;
  }
  throw std::invalid_argument("tuples_1n: n out of supported range");
}

struct RowsN1d {
  std::vector<int> a;  // non-increasing sources
  std::vector<int> b;  // chain twists, in row order
};

template <class F>
void tuples_n1d(int n, int chain, int k, int margin, F&& f) {
  if (chain == 1) {
    tuples_n1(n, k, margin, [&](const RowsN1& t) { f(RowsN1d{t.a, {t.b}}); });
    return;
  }
  if (n != 2 || chain != 2) throw std::invalid_argument("tuples_n1d: out of supported degree range");
  const int M = margin;
  // sum(a) <= k - 2; b1 bounded below by the entry degrees and b2 <= -1, and
  // above by the chain entry degree; b2 closes chi.
  for (int a1 = -M; a1 <= k - 2 + 2 * M; ++a1)
    for (int a2 = -M; a2 <= a1; ++a2) {
      const int s = a1 + a2;
      if (s > k - 2 + 2 * M) continue;
      const int lo = std::max({a1 - k, s - k + 1, -2 - s}) - M;
      const int hi = floor_div(k - 3 - s, 2) + M;
      for (int b1 = lo; b1 <= hi; ++b1) f(RowsN1d{{a1, a2}, {b1, -3 - s - b1}});
    }
}

struct Rows1dN {
  std::vector<int> c;  // chain twists, in row order
  std::vector<int> d;  // non-increasing targets
};

template <class F>
void tuples_1dn(int chain, int n, int k, int margin, F&& f) {
  if (chain == 1) {
    tuples_1n(n, k, margin, [&](const Rows1N& t) { f(Rows1dN{{t.c}, t.d}); });
    return;
  }
  if (n != 2 || chain != 2) throw std::invalid_argument("tuples_1dn: out of supported degree range");
  const int M = margin;
  // c0 >= 0, chain degree c1 - c0 + k >= 0, r = -2 - c0 - 2*c1 + k >= 0.
  for (int c0 = -M; c0 <= k - 1 + M; ++c0)
    for (int c1 = std::max(c0 - k, -1 - c0) - M; 2 * c1 <= k - 2 - c0 + 2 * M; ++c1) {
      const int sd = -3 - c0 - c1;  // d1 + d2
      for (int d1 = ceil_div(sd, 2); d1 <= -1 + M; ++d1)
        f(Rows1dN{{c0, c1}, {d1, sd - d1}});
    }
}

}  // namespace localp1::detail
