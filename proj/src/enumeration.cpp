#include "localp1/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "detail_tuples.hpp"
#include "localp1/checked.hpp"
#include "localp1/monomial.hpp"

namespace localp1 {

void CountTable::set(int d, int k, const std::string& type, long long count, Provenance prov) {
  if (count < 0) throw std::invalid_argument("negative count");
  auto key = std::make_tuple(d, k, type);
  auto it = m_.find(key);
  if (it == m_.end()) {
    TypeCount tc;
    tc.count = count;
    (prov == Provenance::Enumerated ? tc.enumerated : tc.closed_form) = true;
    m_.emplace(key, tc);
    return;
  }
  if (it->second.count != count)
    throw std::logic_error("conflicting counts for " + type + " at d=" + std::to_string(d) +
                           " k=" + std::to_string(k));
  (prov == Provenance::Enumerated ? it->second.enumerated : it->second.closed_form) = true;
}

std::optional<TypeCount> CountTable::get(int d, int k, const std::string& type) const {
  auto it = m_.find(std::make_tuple(d, k, type));
  if (it == m_.end()) return std::nullopt;
  return it->second;
}

long long CountTable::sum_for(int d, int k) const {
  long long s = 0;
  for (const auto& [key, tc] : m_)
    if (std::get<0>(key) == d && std::get<1>(key) == k) s = checked_add(s, tc.count);
  return s;
}

namespace {

long long pairs_le(int n, int m, long long r) {
  if (n < 0 || m < 0 || r < 0) return 0;
  return count_pairs(n, m, r);
}

// Ordered pairs (v, w) with deg v = n, deg w = m and the degree-m monomial
// dividing the degree-n one.
long long divisible_pairs(int n, int m) {
  if (m < 0 || n < m) return 0;
  return static_cast<long long>(m + 1) * (n - m + 1);
}

inline long long seg(int lo, int hi) { return hi >= lo ? hi - lo + 1 : 0; }

// gcd degree of a monomial pair whose slot degrees are base+width and base,
// given the x-exponent difference d (larger-degree exponent minus smaller).
inline int gcd_diff(int base, int width, int d) {
  return base + std::min(0, d) + std::min(0, width - d);
}

long long contrib_121(int k, const detail::Rows121& t) {
  const int a = t.a, b1 = t.b1, b2 = t.b2, c = t.c;
  if (b1 < b2) return 0;
  if (!(a >= 0 && c <= -1 && b1 + c <= -2)) return 0;
  const int ralpha = b1 + b2 - a + k;
  const int rbeta = c + k - b1 - b2 - 1;
  if (ralpha < 0 || rbeta < 0) return 0;
  const int rflag = rbeta - a - 1;
  const int A1 = b1 - a + k, A2 = b2 - a + k;
  const int B1 = c - b1 + k, B2 = c - b2 + k;
  if (A1 < 0 || B2 < 0) return 0;
  const int wb = b1 - b2;
  long long total = 0;

  // Rank-1 strata: all four entries nonzero, the beta exponents are tied to
  // the alpha ones by cycle consistency, so everything depends on
  // eps = xexp(alpha1) - xexp(alpha2) = xexp(beta2) - xexp(beta1).
  if (A2 >= 0 && B1 >= 0) {
    for (int eps = -A2; eps <= A1; ++eps) {
      if (eps >= 0 && eps <= wb) continue;  // a transvection collapses the cycle
      if (b1 == b2 && eps < 0) continue;    // swap-orbit representative
      if (gcd_diff(A2, wb, eps) > ralpha) continue;
      const int gb = gcd_diff(B1, wb, eps);
      const int gen = (gb <= rbeta) ? -1 : 0;
      const int flg = (gb <= rflag) ? 1 : 0;
      if (gen == 0 && flg == 0) continue;
      const long long cnt = seg(std::max(0, -eps), std::min(A2, A1 - eps)) *
                            seg(std::max(0, -eps), std::min(B1, B2 - eps));
      total += cnt * (gen + flg);
    }
  }
  // alpha1 = 0: gcd(alpha) degenerates to deg alpha2.
  if (A2 >= 0 && B1 >= 0 && B2 >= 0 && A2 <= ralpha) {
    long long betas;
    if (b1 > b2)
      betas = pairs_le(B1, B2, rbeta);
    else  // equal middle twists: beta1 = beta2 splits off a free summand
      betas = pairs_le(B1, B1, rbeta) - (B1 <= rbeta ? B1 + 1 : 0);
    total += (A2 + 1) * betas;
  }
  // beta2 = 0; pairs with alpha2 | alpha1 are the same sheaf as an alpha1 = 0
  // config and are counted there.
  if (A1 >= 0 && A2 >= 0 && B1 >= 0 && B1 <= rbeta) {
    long long alphas = pairs_le(A1, A2, ralpha);
    if (A2 <= ralpha) alphas -= divisible_pairs(A1, A2);
    total += (B1 + 1) * alphas;
  }
  // alpha2 = 0; at b1 == b2 these are swap images of alpha1 = 0 configs.
  if (b1 > b2 && A1 >= 0 && B1 >= 0 && B2 >= 0 && A1 <= ralpha) {
    long long betas = pairs_le(B1, B2, rbeta);
    if (B1 <= rbeta) betas -= divisible_pairs(B2, B1);  // beta1 | beta2 collapses
    total += (A1 + 1) * betas;
  }
  // beta1 = 0; at b1 == b2 swap images of beta2 = 0 configs.
  if (b1 > b2 && A1 >= 0 && A2 >= 0 && B2 >= 0 && B2 <= rbeta) {
    long long alphas = pairs_le(A1, A2, ralpha);
    if (A2 <= ralpha) alphas -= divisible_pairs(A1, A2);
    total += (B2 + 1) * alphas;
  }
  return total;
}

long long contrib_22(int k, const detail::Rows22& t) {
  const int a1 = t.a1, a2 = t.a2, b1 = t.b1, b2 = t.b2;
  if (a1 < a2 || b1 < b2) return 0;
  if (!(a2 >= 0 && b1 <= -1)) return 0;
  const int D11 = b1 - a1 + k, D12 = b1 - a2 + k, D21 = b2 - a1 + k, D22 = b2 - a2 + k;
  if (D21 < 0) return 0;  // the corner entry must always be nonzero
  const int L1 = a2 + b1 + b2 - a1 + k + 1;
  const int L2 = b2 - b1 - a1 - a2 + k - 2;
  if (L1 < 0 || L2 < 0) return 0;
  const int L3 = b1 + b2 - a1 + k;
  const int L4 = b1 + k - a1 - a2 - 1;
  const int wa = a1 - a2, wb = b1 - b2;
  long long total = 0;

  // Rank-1 strata; eps = x11 - x21, del = x22 - x21, x12 derived.
  for (int eps = -D21; eps <= D11; ++eps) {
    if (eps >= 0 && eps <= wb) continue;  // row transvection collapses the cycle
    if (b1 == b2 && eps < 0) continue;
    const int g1 = gcd_diff(D21, wb, eps);
    if (g1 > L1) continue;
    const bool flag_eps = (g1 <= L3);
    for (int del = -D21; del <= D22; ++del) {
      if (del >= 0 && del <= wa) continue;  // column transvection collapses
      if (a1 == a2 && del < 0) continue;
      if (gcd_diff(D21, wa, del) > L2) continue;
      const int lo = std::max({0, -eps, -del, -eps - del});
      const int hi = std::min({D21, D11 - eps, D22 - del, D12 - eps - del});
      if (hi < lo) continue;
      const long long cnt = hi - lo + 1;
      total -= cnt;
      if (flag_eps && gcd_diff(D11, wa, del) <= L4) total += cnt;
    }
  }

  // {phi11 = 0}: feasible only when deg phi21 passes its column bound.
  if (D21 <= L1) {
    if (a1 > a2) {
      long long xsum = 0;
      for (int del = -D21; del <= D22; ++del) {
        if (del >= 0 && del <= wa) continue;  // strict: phi22 can be killed
        if (gcd_diff(D21, wa, del) > L2) continue;
        xsum += seg(std::max(0, -del), std::min(D21, D22 - del));
      }
      total += xsum * (D12 + 1);
    } else {
      // a1 == a2: the source swap pairs {phi11}-configs with {phi12}-configs;
      // count orbits here.  gam = x12 - x22; orbits with a row-transvection
      // tie contain two {phi11}-members and are halved via del > 0.
      long long xsum = 0;
      for (int del = -D21; del <= D22; ++del) {
        if (del == 0) continue;
        if (gcd_diff(D21, wa, del) > L2) continue;
        for (int gam = -D22; gam <= D12; ++gam) {
          if (gam >= 0 && gam <= wb && del < 0) continue;
          const int lo = std::max({0, -del, -del - gam});
          const int hi = std::min({D21, D22 - del, D12 - del - gam});
          if (hi >= lo) xsum += hi - lo + 1;
        }
      }
      total += xsum;
    }
  }

  // {phi12 = 0}: skipped at a1 == a2 (source swap folds it into {phi11 = 0}).
  if (a1 > a2) {
    if (b1 > b2) {
      long long xsum = 0;
      for (int eps = -D21; eps <= D11; ++eps) {
        if (eps >= 0 && eps <= wb) continue;  // tie: counted at {phi11 = 0}
        if (gcd_diff(D21, wb, eps) > L1) continue;
        for (int del = -D21; del <= D22; ++del) {
          if (gcd_diff(D21, wa, del) > L2) continue;
          xsum += seg(std::max({0, -eps, -del}), std::min({D21, D11 - eps, D22 - del}));
        }
      }
      total += xsum;
    } else if (D21 <= L2) {
      // b1 == b2: the row swap pairs {phi12}-configs with {phi22}-configs;
      // count orbits here.  Column-transvection ties duplicate the
      // {phi12}-member; keep eps > 0 on those.
      long long xsum = 0;
      for (int eps = -D21; eps <= D11; ++eps) {
        if (eps >= 0 && eps <= wb) continue;
        if (gcd_diff(D21, wb, eps) > L1) continue;
        for (int del = -D21; del <= D22; ++del) {
          if (gcd_diff(D21, wa, del) > L2) continue;
          if (del >= 0 && del <= wa && eps < 0) continue;
          xsum += seg(std::max({0, -eps, -del}), std::min({D21, D11 - eps, D22 - del}));
        }
      }
      total += xsum;
    }
  }

  // {phi22 = 0}: needs deg phi21 within the row bound; nu = x12 - x11.
  if (a1 > a2 && b1 > b2 && D21 <= L2) {
    long long xsum = 0;
    for (int eps = -D21; eps <= D11; ++eps) {
      if (gcd_diff(D21, wb, eps) > L1) continue;  // also rejects the strict window
      for (int nu = -D11; nu <= D12; ++nu) {
        if (nu >= 0 && nu <= wa) continue;  // tie: counted at {phi12 = 0}
        const int lo = std::max({0, -eps, -eps - nu});
        const int hi = std::min({D21, D11 - eps, D12 - eps - nu});
        if (hi >= lo) xsum += hi - lo + 1;
      }
    }
    total += xsum;
  }
  return total;
}

// Ordered monomial tuples for a block of arrows O(a_i) -> O(b) (x) O(k) with
// the pairwise gcd bounds, counted as orbits under permutations of equal
// twists (the action is free; divisibility is asserted).
long long source_block_count(int k, const std::vector<int>& a, int b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    if (a[i] < 0) return 0;
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) {
    deg[i] = b - a[i] + k;
    if (deg[i] < 0) return 0;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (b - a[i] - a[j] + k - 1 < 0) return 0;

  long long raw = 0;
  if (n == 2) {
    raw = pairs_le(deg[0], deg[1], b - a[0] - a[1] + k - 1);
  } else if (n == 3) {
    // gcd(alpha_i, alpha_j) <= b - a_i - a_j + k - 1 is equivalent to the
    // x-exponents separating: x_j >= x_i + a_i + 1 or x_i >= x_j + a_j + 1.
    // The separation relation is a strict total order, so sum over orders.
    std::array<int, 3> p{0, 1, 2};
    do {
      for (int x1 = 0; x1 <= deg[p[1]]; ++x1)
        raw += seg(0, std::min(deg[p[0]], x1 - a[p[0]] - 1)) *
               seg(x1 + a[p[1]] + 1, deg[p[2]]);
    } while (std::next_permutation(p.begin(), p.end()));
  } else {
    throw std::invalid_argument("source block size out of supported range");
  }

  long long denom = 1;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && a[j] == a[i]) ++j;
    for (int m = 2; m <= j - i; ++m) denom *= m;
    i = j;
  }
  if (raw % denom != 0) throw std::logic_error("orbit division failed");
  return raw / denom;
}

// Dual block O(c) -> O(d_i) (x) O(k); separation constants are -d_i.
long long target_block_count(int k, int c, const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  for (int i = 0; i < n; ++i)
    if (d[i] > -1) return 0;
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) {
    deg[i] = d[i] - c + k;
    if (deg[i] < 0) return 0;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d[i] + d[j] - c + k < 0) return 0;

  long long raw = 0;
  if (n == 2) {
    raw = pairs_le(deg[0], deg[1], d[0] + d[1] - c + k);
  } else if (n == 3) {
    std::array<int, 3> p{0, 1, 2};
    do {
      for (int x1 = 0; x1 <= deg[p[1]]; ++x1)
        raw += seg(0, std::min(deg[p[0]], x1 + d[p[0]])) *
               seg(x1 - d[p[1]], deg[p[2]]);
    } while (std::next_permutation(p.begin(), p.end()));
  } else {
    throw std::invalid_argument("target block size out of supported range");
  }

  long long denom = 1;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && d[j] == d[i]) ++j;
    for (int m = 2; m <= j - i; ++m) denom *= m;
    i = j;
  }
  if (raw % denom != 0) throw std::logic_error("orbit division failed");
  return raw / denom;
}

}  // namespace

long long count_type_1d(int d, int k, int margin) {
  if (d < 1) throw std::invalid_argument("count_type_1d needs d >= 1");
  long long total = 0;
  detail::tuples_1d(d, k, margin, [&](const std::vector<long long>& lam) {
    long long prefix = 0;
    for (int h = 1; h <= d; ++h) {
      prefix += lam[h - 1];
      if (prefix < static_cast<long long>(h) * (h - 1) / 2 * k - (h - 1)) return;
    }
    long long w = 1;
    for (int j = 0; j + 1 < d; ++j) w *= lam[j + 1] - lam[j] + 1;
    total = checked_add(total, w);
  });
  return total;
}

long long count_type_n1(int n, int k, int margin) {
  if (n < 2) throw std::invalid_argument("count_type_n1 needs n >= 2");
  long long total = 0;
  detail::tuples_n1(n, k, margin,
                    [&](const detail::RowsN1& t) { total = checked_add(total, source_block_count(k, t.a, t.b)); });
  return total;
}

long long count_type_1n(int n, int k) { return count_type_n1(n, k + n - 1); }

long long count_type_1n_direct(int n, int k, int margin) {
  if (n < 2) throw std::invalid_argument("count_type_1n_direct needs n >= 2");
  long long total = 0;
  detail::tuples_1n(n, k, margin,
                    [&](const detail::Rows1N& t) { total = checked_add(total, target_block_count(k, t.c, t.d)); });
  return total;
}

long long count_type_n1d(int n, int chain, int k, int margin) {
  if (n < 2 || chain < 1) throw std::invalid_argument("count_type_n1d needs n >= 2, chain >= 1");
  long long total = 0;
  detail::tuples_n1d(n, chain, k, margin, [&](const detail::RowsN1d& t) {
    long long tail = 0;
    for (int s = chain; s >= 1; --s) {
      tail += t.b[s - 1] + 1;
      if (tail > 0) return;
    }
    long long ways = 1;
    for (int j = 0; j + 1 < chain; ++j) {
      int cd = t.b[j + 1] - t.b[j] + k;
      if (cd < 0) return;
      ways *= cd + 1;
    }
    total = checked_add(total, ways * source_block_count(k, t.a, t.b[0]));
  });
  return total;
}

long long count_type_1dn(int chain, int n, int k, int margin) {
  if (n < 2 || chain < 1) throw std::invalid_argument("count_type_1dn needs n >= 2, chain >= 1");
  long long total = 0;
  detail::tuples_1dn(chain, n, k, margin, [&](const detail::Rows1dN& t) {
    long long prefix = 0;
    for (int s = 0; s < chain; ++s) {
      prefix += t.c[s] + 1;
      if (prefix < 1) return;
    }
    long long ways = 1;
    for (int j = 0; j + 1 < chain; ++j) {
      int cd = t.c[j + 1] - t.c[j] + k;
      if (cd < 0) return;
      ways *= cd + 1;
    }
    total = checked_add(total, ways * target_block_count(k, t.c[chain - 1], t.d));
  });
  return total;
}

long long count_type_121(int k, int margin) {
  std::vector<detail::Rows121> tuples;
  detail::tuples_121(k, margin, [&](const detail::Rows121& t) { tuples.push_back(t); });
  long long total = 0;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : total)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tuples.size()); ++i)
    total += contrib_121(k, tuples[i]);
  if (total < 0) throw std::logic_error("negative type count");
  return total;
}

long long count_type_22(int k, int margin) {
  std::vector<detail::Rows22> tuples;
  detail::tuples_22(k, margin, [&](const detail::Rows22& t) { tuples.push_back(t); });
  long long total = 0;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : total)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tuples.size()); ++i)
    total += contrib_22(k, tuples[i]);
  if (total < 0) throw std::logic_error("negative type count");
  return total;
}

long long closed_form_n21(int k) {
  if (k < 1) throw std::invalid_argument("closed_form_n21 needs k >= 1");
  long long total = 0;
  for (int b = ceil_div(-(k + 1), 2); b <= -1; ++b)
    total += static_cast<long long>(floor_div(-(b + 1), 2)) * (k + 2 * b + 2) * (k + 2 * b + 3);
  for (int a = 0; 4 * a <= k - 3; ++a)
    total += static_cast<long long>(k - 4 * a - 2) * (k - 4 * a - 1) / 2;
  return total;
}

std::vector<SheafType> compositions_of(int d) {
  std::vector<SheafType> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(SheafType{cur});
      return;
    }
    for (int part = 1; part <= rem; ++part) {
      cur.push_back(part);
      self(self, rem - part);
      cur.pop_back();
    }
  };
  rec(rec, d);
  return out;
}

long long count_for_type(const SheafType& type, int k) {
  const auto& rows = type.rows;
  const int nrows = static_cast<int>(rows.size());
  if (nrows == 1) return rows[0] == 1 ? count_type_1d(1, k) : 0;
  if (std::all_of(rows.begin(), rows.end(), [](int r) { return r == 1; }))
    return count_type_1d(nrows, k);
  if (rows == std::vector<int>{1, 2, 1}) return count_type_121(k);
  if (rows == std::vector<int>{2, 2}) return count_type_22(k);
  if (rows[0] >= 2 && std::all_of(rows.begin() + 1, rows.end(), [](int r) { return r == 1; }))
    return nrows == 2 ? count_type_n1(rows[0], k) : count_type_n1d(rows[0], nrows - 1, k);
  if (rows[nrows - 1] >= 2 &&
      std::all_of(rows.begin(), rows.end() - 1, [](int r) { return r == 1; }))
    return nrows == 2 ? count_type_1n(rows[nrows - 1], k)
                      : count_type_1dn(nrows - 1, rows[nrows - 1], k);
  throw std::invalid_argument("unsupported sheaf type " + type.str());
}

long long count_total(int d, int k) {
  if (d < 1 || d > 4) throw std::invalid_argument("unsupported degree");
  if (k < -1) throw std::invalid_argument("k >= -1 required");
  // The quartic total grows like k^6/6 and leaves 64-bit range near k = 1900;
  // per-tuple partial sums inside the parallel reductions are unchecked.
  if (k > 1500) throw std::overflow_error("counts exceed 64-bit range for this k");
  long long total = 0;
  for (const auto& ty : compositions_of(d)) total = checked_add(total, count_for_type(ty, k));
  return total;
}

std::vector<std::pair<std::string, long long>> counts_by_type(int d, int k) {
  if (d < 1 || d > 4) throw std::invalid_argument("unsupported degree");
  if (k < -1) throw std::invalid_argument("k >= -1 required");
  std::vector<std::pair<std::string, long long>> out;
  for (const auto& ty : compositions_of(d)) out.emplace_back(ty.str(), count_for_type(ty, k));
  return out;
}

}  // namespace localp1
