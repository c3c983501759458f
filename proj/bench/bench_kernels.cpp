// Serial reference vs OpenMP kernels, plus multi-start scaling with thread
// count. Usage: gqd_bench [max_qubits] [repeats]

#include "gqd/gqd.hpp"
#include "gqd/kernels.hpp"
#include "gqd/measurement.hpp"
#include "gqd/parallel.hpp"
#include "gqd/random_states.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

using namespace gqd;

namespace {

double time_ms(const std::function<void()>& body, int repeats) {
  body();  // warm-up
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) body();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / repeats;
}

void row(const char* kernel, int n, double serial_ms, double omp_ms, double diff) {
  std::printf("%-16s %3d %12.3f %12.3f %8.2fx %10.2e\n", kernel, n, serial_ms, omp_ms, serial_ms / omp_ms, diff);
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 7;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  Rng rng(7);

  std::printf("threads available: %d\n", parallel::max_threads());
  std::printf("%-16s %3s %12s %12s %9s %10s\n", "kernel", "n", "serial_ms", "omp_ms", "speedup", "max_diff");

  for (int n = 2; n <= max_n; ++n) {
    const CMatrix rho = random_density_matrix(n, rng).matrix();
    std::vector<Mat2> us;
    std::vector<BlochVector> dirs;
    for (int i = 0; i < n; ++i) {
      dirs.push_back(random_direction(rng));
      us.push_back(measurement_basis(dirs.back()));
    }
    std::vector<int> keep = {0};
    if (n > 2) keep.push_back(n - 1);

    CMatrix a, b;
    // The Kronecker reference is O(8^n); stop it before it dominates.
    if (n <= 9) {
      const double s = time_ms([&] { a = kernels::serial::local_conjugate(rho, us); }, repeats);
      const double o = time_ms([&] { b = kernels::omp::local_conjugate(rho, us); }, repeats);
      row("local_conjugate", n, s, o, max_abs(a - b));
    }
    if (n <= 8) {
      const double s = time_ms([&] { a = kernels::serial::pinch(rho, dirs); }, repeats);
      const double o = time_ms([&] { b = kernels::omp::pinch(rho, us); }, repeats);
      row("pinch", n, s, o, max_abs(a - b));
    }
    {
      const double s = time_ms([&] { a = kernels::serial::phase_damp(rho, 0, 0.3); }, repeats);
      const double o = time_ms([&] { b = kernels::omp::phase_damp(rho, 0, 0.3); }, repeats);
      row("phase_damp", n, s, o, max_abs(a - b));
    }
    {
      const double s = time_ms([&] { a = kernels::serial::partial_trace(rho, keep); }, repeats);
      const double o = time_ms([&] { b = kernels::omp::partial_trace(rho, keep); }, repeats);
      row("partial_trace", n, s, o, max_abs(a - b));
    }
  }

  // Multi-start optimizer: the starts are the unit of parallel work.
  const int n = std::min(max_n, 4);
  const DensityMatrix rho = random_density_matrix(n, rng);
  std::printf("\nmulti-start gqd_numeric, n=%d\n%8s %12s %14s\n", n, "threads", "ms", "value");
  const int hw = omp_get_max_threads();
  for (int t = 1; t <= hw; t *= 2) {
    OptimizerOptions o;
    o.threads = t;
    GqdResult r;
    const double ms = time_ms([&] { r = gqd_numeric(rho, o); }, 1);
    std::printf("%8d %12.1f %14.10f\n", t, ms, r.value);
  }
  return 0;
}
