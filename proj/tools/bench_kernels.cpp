// Times the serial reference scan against the OpenMP kernel on the same
// systems and checks they agree.  Usage: bench_kernels [max_bound]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include "addsys/count_kernel.hpp"
#include "addsys/transform.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace addsys;

namespace {

template <typename F>
double time_best_of(F&& f, int repeats = 3) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t max_bound = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : (1u << 22);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif

    // A contraction with chunky blocks keeps the element passes busy; the
    // plain binary tower exercises the ray recurrence.
    RadixSeq binary({Int(2)}, RadixSeq::Tail::RepeatLast);
    RadixSeq mixed({Int(6), Int(10), Int(12), Int(6), Int(10), Int(12)}, RadixSeq::Tail::RepeatLast);

    std::printf("%-22s %12s %12s %12s %9s\n", "system", "bound", "serial[s]", "openmp[s]", "speedup");
    for (std::uint64_t bound = 1u << 16; bound <= max_bound; bound <<= 2) {
        struct Case {
            const char* name;
            const RadixSeq& radices;
        } cases[] = {{"binary tower", binary}, {"mixed radices", mixed}};
        for (const Case& c : cases) {
            int depth = 1;
            while (c.radices.product(depth) < Int(static_cast<unsigned long>(bound))) ++depth;
            AdditiveSystem system = bns_from_radices(c.radices, depth);
            kernel::CountPlan plan = kernel::make_plan(system, bound);

            std::vector<std::uint8_t> serial_table, parallel_table;
            double serial = time_best_of([&] { serial_table = kernel::count_table_serial(plan); });
            double parallel = time_best_of([&] { parallel_table = kernel::count_table_parallel(plan); });
            bool same = serial_table == parallel_table;
            std::printf("%-22s %12llu %12.4f %12.4f %8.2fx%s\n", c.name,
                        static_cast<unsigned long long>(bound), serial, parallel,
                        parallel > 0 ? serial / parallel : 0.0, same ? "" : "  MISMATCH");
            if (!same) return 1;
        }
    }
    return 0;
}
