// Serial-versus-parallel comparison of the two sweep kernels: the census
// enumerator (orderly backtracking vs the plain reference, one thread vs
// many) and the 4-generator minimality sweep.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilpotentia/catalog.hpp"
#include "nilpotentia/census.hpp"
#include "nilpotentia/structure.hpp"

using namespace nilpotentia;

namespace {

double seconds(void (*fn)(int), int arg) {
  const auto start = std::chrono::steady_clock::now();
  fn(arg);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

size_t census_count;
int census_order;

void run_census(int threads) {
  CensusConfig cfg;
  cfg.order = census_order;
  census_count = enumerate_semigroups(cfg, threads).size();
}

void run_census_reference(int order) {
  census_count = enumerate_semigroups_reference(order, CensusModulo::Iso).size();
}

Semigroup* bench_subject = nullptr;

void run_minimality(int threads) {
  is_minimal_non_nilpotent(*bench_subject, MnnMode::FourGenerator, threads);
}

}  // namespace

int main(int argc, char** argv) {
  const bool heavy = argc > 1 && std::string(argv[1]) == "--heavy";
  const int hw = hardware_threads();
  std::printf("threads available: %d\n\n", hw);

  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "parallel[s]", "speedup");

  for (int order : {4, 5}) {
    census_order = order;
    const double t1 = seconds(run_census, 1);
    const double tn = seconds(run_census, hw);
    std::printf("%-34s %10.3f %10.3f %7.2fx   (%zu classes)\n",
                ("census order " + std::to_string(order)).c_str(), t1, tn,
                t1 / tn, census_count);
  }
  if (heavy) {
    census_order = 6;
    const double t1 = seconds(run_census, 1);
    const double tn = seconds(run_census, hw);
    std::printf("%-34s %10.3f %10.3f %7.2fx   (%zu classes)\n", "census order 6",
                t1, tn, t1 / tn, census_count);
  }

  for (int order : {3, 4}) {
    const double tr = seconds(run_census_reference, order);
    census_order = order;
    const double to = seconds(run_census, 1);
    std::printf("%-34s %10.3f %10.3f %7.2fx   (reference vs orderly)\n",
                ("census order " + std::to_string(order) + " baseline").c_str(),
                tr, to, tr / to);
  }

  for (const char* name : {"y5", "y6"}) {
    Semigroup s = catalog_entry(name).semigroup;
    bench_subject = &s;
    const double t1 = seconds(run_minimality, 1);
    const double tn = seconds(run_minimality, hw);
    std::printf("%-34s %10.3f %10.3f %7.2fx\n",
                ("minimality sweep " + std::string(name)).c_str(), t1, tn, t1 / tn);
  }
  return 0;
}
