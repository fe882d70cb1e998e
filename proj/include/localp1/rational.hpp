#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace localp1 {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number: reduced fraction, denominator > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(const BigInt& n) : num_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  // Throws if not an integer.
  BigInt to_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "p" when integral, otherwise "p/q" with q > 0.
  std::string str() const;

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace localp1
