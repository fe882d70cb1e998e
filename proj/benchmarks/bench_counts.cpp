// Compares the serial reference enumerator against the production OpenMP
// kernels on the degree-4 types.  Usage: bench_counts [k_ref] [k_prod]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "localp1/enumeration.hpp"
#include "localp1/reference.hpp"

using namespace localp1;
namespace chrono = std::chrono;

namespace {

template <class F>
double time_ms(F&& f, long long& out) {
  auto t0 = chrono::steady_clock::now();
  out = f();
  return chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int k_ref = argc > 1 ? std::atoi(argv[1]) : 5;
  const int k_prod = argc > 2 ? std::atoi(argv[2]) : 40;
  const int threads = omp_get_max_threads();

  std::cout << "reference vs production, k = " << k_ref << "\n";
  for (const char* name : {"(1,2,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"}) {
    SheafType ty;
    if (std::string(name) == "(1,2,1)") ty.rows = {1, 2, 1};
    else if (std::string(name) == "(2,2)") ty.rows = {2, 2};
    else if (std::string(name) == "(2,1,1)") ty.rows = {2, 1, 1};
    else ty.rows = {1, 1, 1, 1};

    long long nref = 0, nprod = 0;
    const double tref = time_ms([&] { return reference::count_type(ty, k_ref); }, nref);
    const double tprod = time_ms([&] { return count_for_type(ty, k_ref); }, nprod);
    std::cout << "  " << name << ": reference " << tref << " ms, kernels " << tprod
              << " ms, counts " << nref << "/" << nprod << (nref == nprod ? "" : "  MISMATCH")
              << "\n";
  }

  std::cout << "production N_4(" << k_prod << "), 1 vs " << threads << " threads\n";
  long long n1 = 0, nt = 0;
  omp_set_num_threads(1);
  const double t1 = time_ms([&] { return count_total(4, k_prod); }, n1);
  omp_set_num_threads(threads);
  const double tt = time_ms([&] { return count_total(4, k_prod); }, nt);
  std::cout << "  serial " << t1 << " ms, parallel " << tt << " ms, counts " << n1 << "/" << nt
            << (n1 == nt ? "" : "  MISMATCH") << "\n";
  return (n1 == nt) ? 0 : 1;
}
