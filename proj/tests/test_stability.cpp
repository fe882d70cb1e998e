#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "localp1/sheaf_config.hpp"
#include "localp1/stability.hpp"

using namespace localp1;

namespace {

const Entry X{Monomial{1, 1}};
const Entry Y{Monomial{1, 0}};

Entry mono(int deg, int xexp) { return Entry{Monomial{deg, xexp}}; }

ModuleConfig config_121(int k, int a, int b1, int b2, int c, Entry a1, Entry a2, Entry be1,
                        Entry be2) {
  ModuleConfig cfg;
  cfg.k = k;
  cfg.type = SheafType{{1, 2, 1}};
  cfg.twists = {{a}, {b1, b2}, {c}};
  cfg.maps = {{{a1}, {a2}}, {{be1, be2}}};
  return cfg;
}

ModuleConfig config_22(int k, int a1, int a2, int b1, int b2, Entry p11, Entry p12, Entry p21,
                       Entry p22) {
  ModuleConfig cfg;
  cfg.k = k;
  cfg.type = SheafType{{2, 2}};
  cfg.twists = {{a1, a2}, {b1, b2}};
  cfg.maps = {{{p11, p12}, {p21, p22}}};
  return cfg;
}

}  // namespace

TEST_CASE("single-row chains") {
  CHECK(stable_1d(0, {0}, {}));
  // (0, 0, -2) at k = 1: truncation characteristics 1 and 2
  CHECK(stable_1d(1, {0, 0, -2}, {mono(1, 0), mono(0, 0)}));
  // zero entry is decomposable
  CHECK_FALSE(stable_1d(1, {0, 0, -2}, {Entry::zero(), mono(0, 0)}));
  // lambda = (0, 1) at k = 2, twists (0, -1): accepted
  CHECK(stable_1d(2, {0, -1}, {mono(1, 0)}));
  // failing truncation: twists (-1, 0)
  CHECK_FALSE(stable_1d(2, {-1, 0}, {mono(3, 1)}));
  CHECK_THROWS_AS(stable_1d(1, {0, 0}, {}), std::invalid_argument);
}

TEST_CASE("two sources over one target") {
  CHECK(stable_n1(3, {0, 0}, -2, {X, Y}));
  CHECK_FALSE(stable_n1(3, {0, 0}, -2, {X, X}));  // full common factor
  CHECK_FALSE(stable_n1(3, {0, -1}, -1, {X, mono(2, 1)}));  // negative source twist
}

TEST_CASE("one source over two targets") {
  // duality image of the stable (2,1) datum at k = 3
  CHECK(stable_1n(2, 0, {-1, -1}, {X, Y}));
  CHECK_FALSE(stable_1n(2, 0, {0, -2}, {mono(2, 1), Entry{Monomial{0, 0}}}));  // d1 = 0
  // equal entries exceed the pair bound
  CHECK_FALSE(stable_1n(2, 0, {-1, -1}, {X, X}));
}

TEST_CASE("sources over a chain") {
  CHECK(stable_n1d(2, {0, 0}, {-1, -1}, {X, Y}, {mono(2, 1)}));
  CHECK_FALSE(stable_n1d(2, {0, 0}, {-1, -1}, {X, Y}, {Entry::zero()}));
  // tail sum positive: b = (0, -1)
  CHECK_FALSE(stable_n1d(2, {0, 0}, {0, -1}, {X, Y}, {mono(1, 1)}));
  // degenerates to the two-row test
  for (int k = 0; k <= 8; ++k)
    for (int a1 = 0; a1 <= 2; ++a1)
      for (int x1 = 0; x1 <= k; ++x1)
        for (int x2 = 0; x2 <= k; ++x2) {
          const int b = -2 - 2 * a1;
          const int deg = b - a1 + k;
          if (deg < 0 || x1 > deg || x2 > deg) continue;
          std::vector<Entry> al{mono(deg, x1), mono(deg, x2)};
          CHECK(stable_n1(k, {a1, a1}, b, al) == stable_n1d(k, {a1, a1}, {b}, al, {}));
        }
}

TEST_CASE("chain into targets") {
  // mirror of the chain example
  CHECK(stable_1dn(2, {0, -1}, {-1, -1}, {mono(1, 0)}, {mono(2, 2), mono(2, 0)}));
  CHECK_FALSE(stable_1dn(2, {-1, 0}, {-1, -1}, {mono(3, 0)}, {X, Y}));  // prefix 0
  CHECK_FALSE(stable_1dn(2, {0, -1}, {0, -2}, {mono(1, 0)}, {mono(3, 1), X}));  // d1 = 0
}

TEST_CASE("three-row middle-rank-two strata") {
  auto fam2 = config_121(2, 0, -1, -1, -1, X, Y, mono(2, 0), mono(2, 1));
  CHECK(stable_121({fam2, StratumFlag::Generic}));
  CHECK(stable_121({fam2, StratumFlag::CycleRelationVanishes}));

  auto fam3 = config_121(3, 1, -1, -1, -2, X, Y, mono(2, 1), mono(2, 2));
  CHECK(stable_121({fam3, StratumFlag::Generic}));
  CHECK_FALSE(stable_121({fam3, StratumFlag::CycleRelationVanishes}));

  // two zero entries are decomposable
  auto twozero = config_121(2, 0, -1, -1, -1, Entry::zero(), Y, Entry::zero(), mono(2, 1));
  CHECK_FALSE(stable_121({twozero, StratumFlag::Generic}));
  CHECK_THROWS_AS(stable_121({config_22(2, 0, 0, -1, -2, X, X, X, X), StratumFlag::Generic}),
                  std::invalid_argument);
}

TEST_CASE("two-by-two strata") {
  // all entries the same monomial: the degenerate locus fails its source bound
  auto sq = config_22(2, 0, 0, -1, -1, X, X, X, X);
  CHECK_FALSE(stable_22({sq, StratumFlag::CycleRelationVanishes}));

  // missing corner entry
  auto nocorner = config_22(2, 0, 0, -1, -2, X, X, Entry::zero(), mono(0, 0));
  CHECK_FALSE(stable_22({nocorner, StratumFlag::Generic}));

  // target twist at zero violates the row condition
  auto highb = config_22(2, 1, 0, 0, -4, X, mono(2, 1), mono(0, 0), Entry::zero());
  CHECK_FALSE(stable_22({highb, StratumFlag::Generic}));
}

TEST_CASE("verdicts are invariant under equal-twist swaps") {
  // (1,2,1) with equal middle twists
  for (int x1 = 0; x1 <= 1; ++x1)
    for (int x2 = 0; x2 <= 1; ++x2)
      for (int xb1 = 0; xb1 <= 2; ++xb1)
        for (int xb2 = 0; xb2 <= 2; ++xb2) {
          auto cfg = config_121(2, 0, -1, -1, -1, mono(1, x1), mono(1, x2), mono(2, xb1),
                                mono(2, xb2));
          if (!characters(cfg).has_value()) continue;
          for (const auto& img : detail::swap_images(cfg))
            CHECK(stable_121({cfg, StratumFlag::Generic}) ==
                  stable_121({img, StratumFlag::Generic}));
        }
  // (2,2) with equal source twists; the corner condition moves along
  for (int x11 = 0; x11 <= 1; ++x11)
    for (int x12 = 0; x12 <= 1; ++x12)
      for (int x21 = 0; x21 <= 1; ++x21) {
        const int x22 = x12 + x21 - x11;
        if (x22 < 0 || x22 > 1) continue;
        auto cfg = config_22(3, 0, 0, -1, -2, mono(2, x11), mono(2, x12), mono(1, x21),
                             mono(1, x22));
        for (const auto& img : detail::swap_images(cfg))
          CHECK(stable_22({cfg, StratumFlag::Generic}) == stable_22({img, StratumFlag::Generic}));
      }
}

TEST_CASE("duality matches the accepted sets, not just the counts") {
  for (int k = 1; k <= 10; ++k) {
    for (int d1 = -(k + 2); d1 <= -1; ++d1)
      for (int d2 = -(k + 2); d2 <= d1; ++d2) {
        const int c = -2 - d1 - d2;
        const int n1 = d1 - c + k, n2 = d2 - c + k;
        if (n1 < 0 || n2 < 0) continue;
        for (int x1 = 0; x1 <= n1; ++x1)
          for (int x2 = 0; x2 <= n2; ++x2) {
            std::vector<Entry> betas{mono(n1, x1), mono(n2, x2)};
            const bool lhs = stable_1n(k, c, {d1, d2}, betas);
            // a_j = -1 - d_j, b = -2 - c, same entries, k + 1
            const bool rhs = stable_n1(k + 1, {-1 - d1, -1 - d2}, -2 - c, betas);
            CHECK(lhs == rhs);
          }
      }
  }
}

TEST_CASE("nonnegative kernel degree forces instability") {
  for (int k = 0; k <= 6; ++k)
    for (int a1 = 0; a1 <= 2; ++a1)
      for (int a2 = 0; a2 <= a1; ++a2) {
        const int b = -2 - a1 - a2;
        const int n1 = b - a1 + k, n2 = b - a2 + k;
        if (n1 < 0 || n2 < 0) continue;
        for (int x1 = 0; x1 <= n1; ++x1)
          for (int x2 = 0; x2 <= n2; ++x2) {
            std::vector<Entry> al{mono(n1, x1), mono(n2, x2)};
            if (kernel_degree(a1, a2, b, k, al[0], al[1]) >= 0)
              CHECK_FALSE(stable_n1(k, {a1, a2}, b, al));
          }
      }
}
