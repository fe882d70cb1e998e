#include "localp1/stability.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace localp1 {

namespace {

int count_zeros(const std::vector<Entry>& es) {
  return static_cast<int>(std::count_if(es.begin(), es.end(), [](const Entry& e) { return e.is_zero(); }));
}

bool all_nonzero(const std::vector<Entry>& es) { return count_zeros(es) == 0; }

}  // namespace

bool stable_1d(int k, const std::vector<int>& a, const std::vector<Entry>& entries) {
  (void)k;
  const int d = static_cast<int>(a.size());
  if (d < 1 || static_cast<int>(entries.size()) != d - 1)
    throw std::invalid_argument("stable_1d: wrong type");
  if (!all_nonzero(entries)) return false;
  long long prefix = 0;
  for (int h = 1; h <= d; ++h) {
    prefix += a[h - 1] + 1;
    if (prefix < 1) return false;
  }
  return true;
}

bool stable_n1(int k, const std::vector<int>& a, int b, const std::vector<Entry>& alphas) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(alphas.size()) != n) throw std::invalid_argument("stable_n1: size mismatch");
  if (!all_nonzero(alphas)) return false;
  for (int i = 0; i < n; ++i)
    if (a[i] < 0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gcd_degree(alphas[i], alphas[j]) > b - a[i] - a[j] + k - 1) return false;
  return true;
}

bool stable_1n(int k, int c, const std::vector<int>& d, const std::vector<Entry>& betas) {
  const int n = static_cast<int>(d.size());
  if (static_cast<int>(betas.size()) != n) throw std::invalid_argument("stable_1n: size mismatch");
  if (!all_nonzero(betas)) return false;
  for (int i = 0; i < n; ++i)
    if (d[i] > -1) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gcd_degree(betas[i], betas[j]) > d[i] + d[j] - c + k) return false;
  return true;
}

bool stable_n1d(int k, const std::vector<int>& a, const std::vector<int>& b,
                const std::vector<Entry>& alphas, const std::vector<Entry>& chain) {
  const int n = static_cast<int>(a.size());
  const int len = static_cast<int>(b.size());
  if (len < 1 || static_cast<int>(alphas.size()) != n ||
      static_cast<int>(chain.size()) != len - 1)
    throw std::invalid_argument("stable_n1d: size mismatch");
  if (!all_nonzero(alphas) || !all_nonzero(chain)) return false;
  for (int i = 0; i < n; ++i)
    if (a[i] < 0) return false;
  long long tail = 0;
  for (int s = len; s >= 1; --s) {
    tail += b[s - 1] + 1;
    if (tail > 0) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gcd_degree(alphas[i], alphas[j]) > b[0] - a[i] - a[j] + k - 1) return false;
  return true;
}

bool stable_1dn(int k, const std::vector<int>& c, const std::vector<int>& d,
                const std::vector<Entry>& chain, const std::vector<Entry>& betas) {
  const int n = static_cast<int>(d.size());
  const int len = static_cast<int>(c.size());
  if (len < 1 || static_cast<int>(betas.size()) != n ||
      static_cast<int>(chain.size()) != len - 1)
    throw std::invalid_argument("stable_1dn: size mismatch");
  if (!all_nonzero(betas) || !all_nonzero(chain)) return false;
  for (int i = 0; i < n; ++i)
    if (d[i] > -1) return false;
  long long prefix = 0;
  for (int s = 0; s < len; ++s) {
    prefix += c[s] + 1;
    if (prefix < 1) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gcd_degree(betas[i], betas[j]) > d[i] + d[j] - c[len - 1] + k) return false;
  return true;
}

bool stable_121(const Stratum& s) {
  const ModuleConfig& cfg = s.config;
  if (cfg.type.rows != std::vector<int>{1, 2, 1}) throw std::invalid_argument("stable_121: wrong type");
  const int k = cfg.k;
  const int a = cfg.twists[0][0];
  const int b1 = cfg.twists[1][0], b2 = cfg.twists[1][1];
  const int c = cfg.twists[2][0];
  assert(b1 >= b2);
  const Entry &alpha1 = cfg.maps[0][0][0], &alpha2 = cfg.maps[0][1][0];
  const Entry &beta1 = cfg.maps[1][0][0], &beta2 = cfg.maps[1][0][1];

  int zeros = alpha1.is_zero() + alpha2.is_zero() + beta1.is_zero() + beta2.is_zero();
  if (zeros > 1) return false;
  if (!(c <= -1 && a >= 0 && b1 + c <= -2)) return false;
  if (gcd_degree(alpha1, alpha2) > b1 + b2 - a + k) return false;
  if (gcd_degree(beta1, beta2) > c + k - b1 - b2 - 1) return false;
  if (s.flag == StratumFlag::CycleRelationVanishes) {
    assert(zeros == 0);
    if (gcd_degree(beta1, beta2) > c + k - b1 - b2 - a - 2) return false;
  }
  return true;
}

bool stable_22(const Stratum& s) {
  const ModuleConfig& cfg = s.config;
  if (cfg.type.rows != std::vector<int>{2, 2}) throw std::invalid_argument("stable_22: wrong type");
  const int k = cfg.k;
  const int a1 = cfg.twists[0][0], a2 = cfg.twists[0][1];
  const int b1 = cfg.twists[1][0], b2 = cfg.twists[1][1];
  assert(a1 >= a2 && b1 >= b2);
  const Entry &p11 = cfg.maps[0][0][0], &p12 = cfg.maps[0][0][1];
  const Entry &p21 = cfg.maps[0][1][0], &p22 = cfg.maps[0][1][1];

  if (p21.is_zero()) return false;
  int zeros = p11.is_zero() + p12.is_zero() + p21.is_zero() + p22.is_zero();
  if (zeros > 1) return false;
  if (!(a1 >= a2 && a2 >= 0 && b2 <= b1 && b1 <= -1)) return false;
  if (gcd_degree(p11, p21) > a2 + b1 + b2 - a1 + k + 1) return false;
  if (gcd_degree(p21, p22) > b2 - b1 - a1 - a2 + k - 2) return false;
  if (s.flag == StratumFlag::CycleRelationVanishes) {
    assert(zeros == 0);
    if (gcd_degree(p11, p21) > b1 + b2 - a1 + k) return false;
    if (gcd_degree(p11, p12) > b1 + k - a1 - a2 - 1) return false;
  }
  return true;
}

bool stable(const Stratum& s) {
  const ModuleConfig& cfg = s.config;
  const auto& rows = cfg.type.rows;
  const int nrows = static_cast<int>(rows.size());
  const bool all_ones = std::all_of(rows.begin(), rows.end(), [](int r) { return r == 1; });

  if (all_ones) {
    std::vector<int> a;
    std::vector<Entry> entries;
    for (const auto& row : cfg.twists) a.push_back(row[0]);
    for (const auto& m : cfg.maps) entries.push_back(m[0][0]);
    return stable_1d(cfg.k, a, entries);
  }
  if (rows == std::vector<int>{1, 2, 1}) return stable_121(s);
  if (rows == std::vector<int>{2, 2}) return stable_22(s);

  if (rows[0] >= 2 && std::all_of(rows.begin() + 1, rows.end(), [](int r) { return r == 1; })) {
    std::vector<int> b;
    std::vector<Entry> alphas, chain;
    for (int j = 1; j < nrows; ++j) b.push_back(cfg.twists[j][0]);
    for (int i = 0; i < rows[0]; ++i) alphas.push_back(cfg.maps[0][0][i]);
    for (int j = 1; j + 1 < nrows; ++j) chain.push_back(cfg.maps[j][0][0]);
    if (nrows == 2) return stable_n1(cfg.k, cfg.twists[0], b[0], alphas);
    return stable_n1d(cfg.k, cfg.twists[0], b, alphas, chain);
  }
  if (rows[nrows - 1] >= 2 &&
      std::all_of(rows.begin(), rows.end() - 1, [](int r) { return r == 1; })) {
    std::vector<int> c;
    std::vector<Entry> chain, betas;
    for (int j = 0; j + 1 < nrows; ++j) c.push_back(cfg.twists[j][0]);
    for (int j = 0; j + 2 < nrows; ++j) chain.push_back(cfg.maps[j][0][0]);
    for (int i = 0; i < rows[nrows - 1]; ++i) betas.push_back(cfg.maps[nrows - 2][i][0]);
    if (nrows == 2) return stable_1n(cfg.k, c[0], cfg.twists[nrows - 1], betas);
    return stable_1dn(cfg.k, c, cfg.twists[nrows - 1], chain, betas);
  }
  throw std::invalid_argument("stable: unsupported sheaf type " + cfg.type.str());
}

}  // namespace localp1
