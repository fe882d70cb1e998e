#include <map>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "localp1/predictions.hpp"
#include "localp1/rational.hpp"

using namespace localp1;

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(BigInt(4), BigInt(-6)).str() == "-2/3");
  CHECK(Rational(6) / Rational(3) == Rational(2));
  CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str() == "1/2");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK_FALSE((Rational(1) / Rational(3)).is_integer());

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 24);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a(BigInt(num(rng)), BigInt(den(rng)));
    Rational b(BigInt(num(rng)), BigInt(den(rng)));
    Rational c(BigInt(num(rng)), BigInt(den(rng)));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
  }
}

TEST_CASE("closed-form BPS values") {
  CHECK(bps_closed_form(2, 2) == -2);
  for (int k = -1; k <= 9; ++k) CHECK(bps_closed_form(1, k) == ((k % 2 + 2) % 2 == 0 ? -1 : 1));
  CHECK(bps_closed_form(4, 1) == -7);
  CHECK(bps_closed_form(4, 2) == -102);
  CHECK(bps_closed_form(4, 3) == -620);
  CHECK(bps_closed_form(2, 5) == -9);
  CHECK(bps_closed_form(3, 2) == -12);  // sign (-1)^(k+1) at k = 2
  CHECK(bps_closed_form(3, 3) == 40);
  for (int d = 2; d <= 4; ++d) CHECK(bps_closed_form(d, -1) == 0);
  CHECK(bps_closed_form(1, -1) == 1);
  CHECK_THROWS_AS(bps_closed_form(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(bps_closed_form(0, 1), std::invalid_argument);
}

TEST_CASE("sign and dimension") {
  CHECK(sign_and_dimension(3, 1) == std::pair<int, long long>{1, 10});
  CHECK(sign_and_dimension(4, 1) == std::pair<int, long long>{-1, 17});
  CHECK(sign_and_dimension(1, -1) == std::pair<int, long long>{1, 0});
  CHECK(bps_from_count(2, 2, 2) == -2);
  CHECK(bps_from_count(4, 1, 7) == -7);
  for (int k = -1; k <= 6; ++k) CHECK(bps_from_count(1, k, 1) == bps_closed_form(1, k));
  CHECK_THROWS_AS(bps_from_count(2, 2, -1), std::invalid_argument);
}

TEST_CASE("genus-zero sum and its inversion") {
  std::map<int, long long> bps{{1, -1}, {2, -2}};
  CHECK(gv_sum(2, bps).str() == "-17/8");
  CHECK(gv_sum(1, {{1, 5}}) == Rational(5));
  CHECK_THROWS_AS(gv_sum(4, bps), std::invalid_argument);  // missing divisors 4

  // divisors 1, 2, 4 with cubes 64, 8, 1
  std::map<int, long long> bps4{{1, -1}, {2, -2}, {4, -102}};
  CHECK(gv_sum(4, bps4) ==
        Rational(-102) + Rational(BigInt(-2), BigInt(8)) + Rational(BigInt(-1), BigInt(64)));

  CHECK(gv_invert(2, {{1, Rational(-1)}, {2, Rational(BigInt(-17), BigInt(8))}}) == -2);
  CHECK_THROWS_AS(gv_invert(2, {{1, Rational(-1)}, {2, Rational(BigInt(1), BigInt(3))}}),
                  std::domain_error);
  CHECK_THROWS_AS(gv_invert(2, {{2, Rational(1)}}), std::invalid_argument);

  // Round trip on the closed-form vectors for d <= 4, k <= 10.
  for (int d = 1; d <= 4; ++d)
    for (int k = -1; k <= 10; ++k) {
      std::map<int, long long> vec;
      std::map<int, Rational> gw;
      for (int e = 1; e <= d; ++e)
        if (d % e == 0) vec[e] = bps_closed_form(e, k);
      for (int e = 1; e <= d; ++e)
        if (d % e == 0) gw[e] = gv_sum(e, vec);
      CHECK(gv_invert(d, gw) == vec[d]);
    }

  // Round trip on random integer vectors for d <= 12.
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> val(-1000000, 1000000);
  for (int d = 1; d <= 12; ++d)
    for (int trial = 0; trial < 20; ++trial) {
      std::map<int, long long> vec;
      std::map<int, Rational> gw;
      for (int e = 1; e <= d; ++e)
        if (d % e == 0) vec[e] = val(rng);
      for (int e = 1; e <= d; ++e)
        if (d % e == 0) gw[e] = gv_sum(e, vec);
      CHECK(gv_invert(d, gw) == vec[d]);
    }
}
