// bobench: timing comparison of the OpenMP lattice-sum kernels against the
// serial reference loops, plus a consistency check of the results.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "bo/lattice.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bo;

namespace {

double time_once(double (*f)(const LatticeSumSpec&), const LatticeSumSpec& spec,
                 double& value) {
    const auto t0 = std::chrono::steady_clock::now();
    value = f(spec);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled (serial build)\n");
#endif
    std::printf("%-10s %2s %6s  %12s  %10s  %10s  %7s  %9s\n", "lemma", "m", "N",
                "value", "parallel", "serial", "speedup", "agreement");

    const std::vector<LatticeSumSpec> specs = {
        {LatticeSum::algebrTV, 2, 1024},  {LatticeSum::algebrTV, 2, 4096},
        {LatticeSum::algebrTV2, 2, 1024}, {LatticeSum::algebrTV2, 2, 4096},
        {LatticeSum::algebrTV2, 3, 128},  {LatticeSum::algebrTV2, 3, 256},
        {LatticeSum::serienew, 2, 1024},  {LatticeSum::serienew, 2, 4096},
        {LatticeSum::sersaut, 2, 1024},   {LatticeSum::sersaut, 2, 4096},
    };

    int bad = 0;
    for (const auto& spec : specs) {
        double vp = 0.0, vs = 0.0;
        const double tp = time_once(&evaluate, spec, vp);
        const double ts = time_once(&evaluate_serial, spec, vs);
        const double rel = std::abs(vp - vs) / std::max(std::abs(vs), 1e-300);
        if (rel > 1e-12) ++bad;
        std::printf("%-10s %2d %6ld  %12.6g  %8.4f s  %8.4f s  %6.2fx  %9.2e\n",
                    lattice_sum_name(spec.id), spec.m, spec.n_cut, vp, tp, ts, ts / tp,
                    rel);
    }
    if (bad) std::printf("DISAGREEMENT in %d cases\n", bad);
    return bad ? 1 : 0;
}
