// Benchmark: even-loop scan, serial reference vs the OpenMP kernel.

#include "ogspec/orbit.hpp"
#include "ogspec/spectrum.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
  long long max_sum = argc > 1 ? std::atoll(argv[1]) : 14;
  using clock = std::chrono::steady_clock;
  std::cout << "deriving the orbit..." << std::flush;
  ogspec::OrbitGraph b7 = ogspec::find_b7();
  std::cout << " done (" << b7.size() << " vertices)\n";

  auto t0 = clock::now();
  auto serial = ogspec::scan_even_loops_serial(b7, max_sum);
  auto t1 = clock::now();
  auto parallel = ogspec::scan_even_loops(b7, max_sum);
  auto t2 = clock::now();

  double ts = std::chrono::duration<double>(t1 - t0).count();
  double tp = std::chrono::duration<double>(t2 - t1).count();
  std::cout << "scan_even_loops, period sum <= " << max_sum << ":\n";
  std::cout << "  serial:   " << ts << " s, " << serial.size() << " values\n";
#ifdef _OPENMP
  std::cout << "  openmp:   " << tp << " s (" << omp_get_max_threads()
            << " threads), " << parallel.size() << " values\n";
  std::cout << "  speedup:  " << ts / tp << "x\n";
#else
  std::cout << "  parallel build without OpenMP: " << tp << " s\n";
#endif
  if (serial.size() != parallel.size()) {
    std::cerr << "result mismatch between serial and parallel scans\n";
    return 1;
  }
  for (size_t k = 0; k < serial.size(); ++k) {
    if (serial[k].lv.value != parallel[k].lv.value) {
      std::cerr << "value mismatch at index " << k << "\n";
      return 1;
    }
  }
  std::cout << "  results identical\n";
  return 0;
}
