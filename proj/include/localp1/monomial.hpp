#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace localp1 {

// A monomial x^e y^(n-e) in the homogeneous coordinates x, y of P^1.
// At fixed total degree a monomial is identified by its x-exponent;
// no coefficient is ever stored.
struct Monomial {
  int deg = 0;   // total degree n, >= 0
  int xexp = 0;  // exponent of x, 0 <= xexp <= deg

  int yexp() const { return deg - xexp; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;
};

// Validating constructor; throws std::invalid_argument on bad exponents.
Monomial make_monomial(int deg, int xexp);

// A matrix entry of an equivariant map: a structural zero or a monomial.
class Entry {
 public:
  Entry() = default;  // zero
  Entry(const Monomial& m) : m_(m) {}

  static Entry zero() { return Entry(); }

  bool is_zero() const { return !m_.has_value(); }
  bool nonzero() const { return m_.has_value(); }

  // Degree/exponent queries are rejected on zero entries.
  const Monomial& monomial() const;
  int deg() const { return monomial().deg; }
  int xexp() const { return monomial().xexp; }
  int yexp() const { return monomial().yexp(); }

  friend bool operator==(const Entry&, const Entry&) = default;
  // Zero sorts before every monomial; monomials by (deg, xexp).
  friend std::strong_ordering operator<=>(const Entry& a, const Entry& b) {
    if (a.is_zero() || b.is_zero()) return (!a.is_zero()) <=> (!b.is_zero());
    return a.monomial() <=> b.monomial();
  }

  std::string str() const;  // "0" or "x^a y^b"

 private:
  std::optional<Monomial> m_;
};

// Degree of gcd(u, v) with the convention gcd(m, 0) = m.
// Both zero is an error ("undefined gcd").
int gcd_degree(const Entry& u, const Entry& v);

// True iff u and v are scalar multiples of each other for some choice of
// coefficients: both equal monomials, or at least one is zero.
bool proportional(const Entry& u, const Entry& v);

// Number of ordered pairs (v, w) of monomials with deg v = n, deg w = m and
// gcd_degree(v, w) <= r.  Totalized: 0 for r < 0, (r+1)(r+2) for
// 0 <= r < min(n, m), and (n+1)(m+1) once the constraint is vacuous.
// Negative n or m is an error.
long long count_pairs(int n, int m, long long r);

// The n+1 monomials of degree n, x-exponent ascending.
std::vector<Monomial> enumerate_monomials(int n);

}  // namespace localp1
