// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion carries its own exact checks and time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "localp1/enumeration.hpp"
#include "localp1/monomial.hpp"
#include "localp1/predictions.hpp"
#include "localp1/rational.hpp"
#include "localp1/validation.hpp"

using namespace localp1;
namespace chrono = std::chrono;

namespace {

struct Criterion {
  std::string name;
  double limit_s;
  std::function<bool(std::string&)> run;
};

bool expect(bool ok, const std::string& what, std::string& msg) {
  if (!ok && msg.empty()) msg = what;
  return ok;
}

long long cubic(long long k) { return k * (k + 1) * (k + 1) * (k + 2) / 6; }

long long quadratic(long long k) {
  return (k % 2 == 0) ? k * (k + 2) / 4 : (k + 1) * (k + 1) / 4;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"AC-1 degree 1: N = 1 and n = (-1)^(k+1), -1 <= k <= 50", 1.0,
                      [](std::string& msg) {
                        bool ok = true;
                        for (int k = -1; k <= 50 && ok; ++k) {
                          ok &= expect(count_total(1, k) == 1, "N_1 != 1 at k=" + std::to_string(k), msg);
                          ok &= expect(bps_from_count(1, k, 1) == bps_closed_form(1, k),
                                       "n_1 mismatch at k=" + std::to_string(k), msg);
                        }
                        return ok;
                      }});

  criteria.push_back({"AC-2 degree 2 count matches the quadratic form, -1 <= k <= 50", 1.0,
                      [](std::string& msg) {
                        bool ok = true;
                        for (int k = -1; k <= 50 && ok; ++k)
                          ok &= expect(count_total(2, k) == quadratic(k),
                                       "N_2 mismatch at k=" + std::to_string(k), msg);
                        return ok;
                      }});

  criteria.push_back(
      {"AC-3 degree 3 count matches the cubic form (k <= 30) and telescopes (k <= 20)", 60.0,
       [](std::string& msg) {
         bool ok = true;
         for (int k = -1; k <= 30 && ok; ++k)
           ok &= expect(count_total(3, k) == cubic(k), "N_3 mismatch at k=" + std::to_string(k), msg);
         for (int k = 1; k <= 20 && ok; ++k)
           ok &= expect(count_total(3, k) - count_total(3, k - 1) ==
                            static_cast<long long>(k) * (k + 1) * (2 * k + 1) / 3,
                        "telescoping fails at k=" + std::to_string(k), msg);
         return ok;
       }});

  criteria.push_back(
      {"AC-4 type (2,1) closed form and the (1,2) duality, both routes, k <= 50", 60.0,
       [](std::string& msg) {
         bool ok = true;
         for (int k = 1; k <= 50 && ok; ++k) {
           ok &= expect(count_type_n1(2, k) == closed_form_n21(k),
                        "(2,1) closed form fails at k=" + std::to_string(k), msg);
           ok &= expect(count_type_1n(2, k) == count_type_n1(2, k + 1),
                        "(1,2) duality route fails at k=" + std::to_string(k), msg);
           ok &= expect(count_type_1n_direct(2, k) == count_type_n1(2, k + 1),
                        "(1,2) direct route fails at k=" + std::to_string(k), msg);
         }
         return ok;
       }});

  criteria.push_back({"AC-5 pair-count closed form equals brute force, n,m <= 8, -2 <= r <= 10",
                      1.0, [](std::string& msg) {
                        bool ok = true;
                        for (int n = 0; n <= 8 && ok; ++n)
                          for (int m = 0; m <= 8 && ok; ++m)
                            for (int r = -2; r <= 10 && ok; ++r) {
                              long long brute = 0;
                              for (const auto& v : enumerate_monomials(n))
                                for (const auto& w : enumerate_monomials(m))
                                  if (gcd_degree(Entry(v), Entry(w)) <= r) ++brute;
                              ok &= expect(count_pairs(n, m, r) == brute,
                                           "pair count mismatch at (" + std::to_string(n) + "," +
                                               std::to_string(m) + "," + std::to_string(r) + ")",
                                           msg);
                            }
                        return ok;
                      }});

  criteria.push_back(
      {"AC-6 degree 4: signed count equals the quartic form, -1 <= k <= 20", 600.0,
       [](std::string& msg) {
         bool ok = true;
         for (int k = -1; k <= 20 && ok; ++k)
           ok &= expect(bps_from_count(4, k, count_total(4, k)) == bps_closed_form(4, k),
                        "n_4 mismatch at k=" + std::to_string(k), msg);
         return ok;
       }});

  criteria.push_back({"AC-7 both worked families total chi = 2; the limit contributes 1", 1.0,
                      [](std::string& msg) {
                        auto rep2 = component_chi_report(2);
                        auto rep3 = component_chi_report(3);
                        bool ok = expect(rep2.total == 2, "k=2 family total != 2", msg);
                        ok &= expect(rep3.total == 2, "k=3 family total != 2", msg);
                        ok &= expect(rep3.rows.back().label == "limit configuration" &&
                                         rep3.rows.back().chi == 1,
                                     "limit configuration does not contribute 1", msg);
                        return ok;
                      }});

  criteria.push_back({"AC-8 GIT stability at weights (2,1,1,1) matches the sheaf-side list", 1.0,
                      [](std::string& msg) {
                        bool ok = true;
                        for (const auto& labels : four_point_partitions()) {
                          FourPointConfig cfg;
                          cfg.label = labels;
                          ok &= expect(git_stable(cfg) == gieseker_config_stable(cfg),
                                       "disagreement on a coincidence partition", msg);
                        }
                        return ok;
                      }});

  criteria.push_back(
      {"AC-9 genus-zero sum inverts exactly; GW value -17/8 at (d,k) = (2,2)", 1.0,
       [](std::string& msg) {
         bool ok = true;
         for (int d = 1; d <= 4 && ok; ++d)
           for (int k = -1; k <= 10 && ok; ++k) {
             std::map<int, long long> vec;
             std::map<int, Rational> gw;
             for (int e = 1; e <= d; ++e)
               if (d % e == 0) vec[e] = bps_closed_form(e, k);
             for (int e = 1; e <= d; ++e)
               if (d % e == 0) gw[e] = gv_sum(e, vec);
             ok &= expect(gv_invert(d, gw) == vec[d],
                          "round trip fails at d=" + std::to_string(d) + " k=" + std::to_string(k),
                          msg);
           }
         std::map<int, long long> bps{{1, bps_closed_form(1, 2)}, {2, bps_closed_form(2, 2)}};
         ok &= expect(gv_sum(2, bps).str() == "-17/8", "GW(2,2) != -17/8", msg);
         return ok;
       }});

  criteria.push_back({"AC-10 naive recount equals production on every type, d <= 3, k <= 6", 60.0,
                      [](std::string& msg) {
                        bool ok = true;
                        for (int d = 1; d <= 3 && ok; ++d)
                          for (int k = -1; k <= 6 && ok; ++k) {
                            auto table = brute_force_reference(d, k);
                            for (const auto& ty : compositions_of(d)) {
                              auto tc = table.get(d, k, ty.str());
                              ok &= expect(tc.has_value() && tc->count == count_for_type(ty, k),
                                           "mismatch for " + ty.str() + " at k=" + std::to_string(k),
                                           msg);
                            }
                          }
                        return ok;
                      }});

  int failures = 0;
  for (auto& c : criteria) {
    std::string msg;
    const auto t0 = chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(msg);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    const double secs = chrono::duration<double>(chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      ok = false;
      if (msg.empty()) msg = "over time budget";
    }
    std::printf("%-4s %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                msg.empty() ? "" : " -- ", msg.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
