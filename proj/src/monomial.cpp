#include "localp1/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace localp1 {

Monomial make_monomial(int deg, int xexp) {
  if (deg < 0 || xexp < 0 || xexp > deg) throw std::invalid_argument("bad monomial exponents");
  return Monomial{deg, xexp};
}

const Monomial& Entry::monomial() const {
  if (!m_) throw std::logic_error("degree query on zero entry");
  return *m_;
}

std::string Entry::str() const {
  if (is_zero()) return "0";
  return "x^" + std::to_string(xexp()) + "y^" + std::to_string(yexp());
}

int gcd_degree(const Entry& u, const Entry& v) {
  if (u.is_zero() && v.is_zero()) throw std::invalid_argument("undefined gcd");
  if (u.is_zero()) return v.deg();
  if (v.is_zero()) return u.deg();
  return std::min(u.xexp(), v.xexp()) + std::min(u.yexp(), v.yexp());
}

bool proportional(const Entry& u, const Entry& v) {
  if (u.is_zero() || v.is_zero()) return true;
  return u.monomial() == v.monomial();
}

long long count_pairs(int n, int m, long long r) {
  if (n < 0 || m < 0) throw std::invalid_argument("count_pairs needs nonnegative degrees");
  if (r < 0) return 0;
  long long lo = std::min(n, m);
  if (r >= lo) return static_cast<long long>(n + 1) * (m + 1);
  return (r + 1) * (r + 2);
}

std::vector<Monomial> enumerate_monomials(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> out;
  out.reserve(n + 1);
  for (int e = 0; e <= n; ++e) out.push_back(Monomial{n, e});
  return out;
}

}  // namespace localp1
