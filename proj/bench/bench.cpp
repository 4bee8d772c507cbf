// Compares the serial reference kernels against their OpenMP variants and
// checks that both produce identical exact results.

#include "coh/ck.hpp"
#include "coh/hilbert.hpp"
#include "coh/taut.hpp"

#include <omp.h>

#include <cstdio>
#include <functional>
#include <string>

namespace {

double time_of(const std::function<void()>& fn) {
    double t0 = omp_get_wtime();
    fn();
    return omp_get_wtime() - t0;
}

void row(const std::string& name, double serial, double parallel, bool equal) {
    std::printf("%-34s %10.3fs %10.3fs %8.2fx  %s\n", name.c_str(), serial,
                parallel, serial / parallel, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    using namespace coh;
    const int threads = omp_get_max_threads();
    std::printf("threads: %d\n", threads);
    std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "parallel",
                "speedup");

    {
        SpaceSpec sp = make_space(SpaceKind::YType, 2);
        CohClass serial = zero_class(sp, sp.oddRank + 2);
        CohClass parallel = serial;
        double ts = time_of([&] { serial = symmetrized_tau_sum_serial(sp); });
        double tp = time_of([&] { parallel = symmetrized_tau_sum(sp, threads); });
        row("symmetrized tau sum (g=2, 720)", ts, tp, serial == parallel);
    }

    {
        CKDecomposition ck = build_ck(3);
        Report serial, parallel;
        double ts = time_of([&] { serial = mck_full_check(ck, 1); });
        double tp = time_of([&] { parallel = mck_full_check(ck, threads); });
        bool equal = report_json(serial) == report_json(parallel);
        row("mck triple sweep (g=3)", ts, tp, equal);
    }

    {
        const long cap = 1'000'000;
        HilbertFunction s1, p1, s2, p2;
        double ts = time_of([&] {
            s1 = image_hilbert(2, 3, cap, 1);
            s2 = abstract_hilbert(2, 3, cap, 1);
        });
        double tp = time_of([&] {
            p1 = image_hilbert(2, 3, cap, threads);
            p2 = abstract_hilbert(2, 3, cap, threads);
        });
        row("hilbert functions (g=2, m=3)", ts, tp, s1 == p1 && s2 == p2);
    }

    return 0;
}
