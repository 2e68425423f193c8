/* Timings of the parallel kernels against their serial references. Both
 * must produce identical tables; the point of the run is the ratio. */
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "qpb2/characters.hpp"
#include "qpb2/qp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qpb2;
using Clock = std::chrono::steady_clock;

template <class F, class G>
static void bench(const std::string& name, F&& serial, G&& parallel) {
    auto t0 = Clock::now();
    auto a = serial();
    auto t1 = Clock::now();
    auto b = parallel();
    auto t2 = Clock::now();
    double ts = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double tp = std::chrono::duration<double, std::milli>(t2 - t1).count();
    bool same = a == b;
    std::cout << std::left << std::setw(32) << name << std::right
              << std::fixed << std::setprecision(1) << std::setw(10) << ts
              << " ms" << std::setw(10) << tp << " ms   x"
              << std::setprecision(2) << (tp > 0 ? ts / tp : 0.0)
              << (same ? "   identical" : "   MISMATCH") << std::endl;
    if (!same) std::exit(1);
}

int main(int argc, char** argv) {
    int qmax = argc > 1 ? std::atoi(argv[1]) : 12;
    int emax = argc > 2 ? std::atoi(argv[2]) : 10;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (no OpenMP)\n";
#endif
    std::cout << std::left << std::setw(32) << "kernel" << std::right
              << std::setw(13) << "serial" << std::setw(13) << "parallel"
              << "   ratio\n";

    bench("enumerate_basis N qmax " + std::to_string(emax),
          [&] { return enumerate_basis_serial(0, emax); },
          [&] { return enumerate_basis(0, emax); });
    bench("enumerate_basis L(2) qmax " + std::to_string(emax),
          [&] { return enumerate_basis_serial(2, emax); },
          [&] { return enumerate_basis(2, emax); });
    bench("ch_WN_fermionic qmax " + std::to_string(qmax),
          [&] { return ch_WN_fermionic_serial(qmax).coeffs; },
          [&] { return ch_WN_fermionic(qmax).coeffs; });
    bench("ch_WL_fermionic(3) qmax " + std::to_string(qmax),
          [&] { return ch_WL_fermionic_serial(3, qmax).coeffs; },
          [&] { return ch_WL_fermionic(3, qmax).coeffs; });
    return 0;
}
