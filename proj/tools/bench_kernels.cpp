// Compares the OpenMP scan kernels against their serial reference
// implementations on the larger family members and reports wall times.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symdig/constructions.hpp"
#include "symdig/digraph.hpp"
#include "symdig/finfield.hpp"
#include "symdig/verify.hpp"

namespace {

using namespace symdig;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench_a2(const std::string& name, const Digraph& g) {
  auto start = Clock::now();
  const auto serial = a2_sets_serial(g);
  const double serial_ms = ms_since(start);

  start = Clock::now();
  const auto parallel = a2_sets(g);
  const double parallel_ms = ms_since(start);

  const bool equal = serial.plus.pairs == parallel.plus.pairs &&
                     serial.mixed.pairs == parallel.mixed.pairs &&
                     serial.minus.pairs == parallel.minus.pairs;
  std::printf("%-28s a2_sets      serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
              name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms,
              equal ? "results equal" : "RESULTS DIFFER");
}

void bench_distance_scan(const std::string& name, const GeneratedAction& action) {
  // The distance-preservation claim runs the scan kernel; time it with the
  // pragmas active versus a single thread.
  auto start = Clock::now();
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
#endif
  check_hamming_preserved(action);
  const double serial_ms = ms_since(start);

#ifdef _OPENMP
  omp_set_num_threads(threads);
#endif
  start = Clock::now();
  check_hamming_preserved(action);
  const double parallel_ms = ms_since(start);

  std::printf("%-28s distance scan serial %8.2f ms   parallel %9.2f ms   speedup %5.2fx\n",
              name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel kernels fall back to the serial path\n\n");
#endif

  const auto f7 = FiniteField::make(7, 1);
  const auto f11 = FiniteField::make(11, 1);

  {
    const auto [g, w] = build_xqn(f7, 2);
    bench_a2("xq-power q=7 n=2 (256 v)", g);
    bench_distance_scan("xq-power q=7 n=2 (256 v)", w);
  }
  {
    const auto [g, w] = build_xqn(f11, 2);
    bench_a2("xq-power q=11 n=2 (576 v)", g);
    bench_distance_scan("xq-power q=11 n=2 (576 v)", w);
  }
  {
    const auto g = build_hamming(12, 3, false);
    bench_a2("hamming m=12 n=3 (1728 v)", g);
    bench_distance_scan("hamming m=12 n=3 (1728 v)", hamming_wreath_action(12, 3));
  }
  return 0;
}
