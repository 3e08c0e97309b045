// Compares the serial reference enumeration against the parallel kernel.
// Both must emit identical streams; the interesting number is the speedup.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <omp.h>

#include "ewb/effect_algebra.hpp"
#include "ewb/enumerate.hpp"

using namespace ewb;

namespace {

struct Timing {
    double seconds;
    size_t count;
};

template <typename F> Timing timed(F&& f, int repeats) {
    Timing best{1e300, 0};
    for (int r = 0; r < repeats; ++r) {
        double t0 = omp_get_wtime();
        size_t n = f();
        double dt = omp_get_wtime() - t0;
        if (dt < best.seconds) best = {dt, n};
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    int max_size = 6;
    int repeats = 3;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--max" && i + 1 < argc)
            max_size = std::atoi(argv[++i]);
        else if (a == "--repeats" && i + 1 < argc)
            repeats = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--max N] [--repeats R]\n", argv[0]);
            return 2;
        }
    }

    std::printf("threads: %d  max size: %d  repeats: %d (best of)\n", omp_get_max_threads(),
                max_size, repeats);

    Timing ea_serial = timed(
        [&] { return enumerate_effect_algebras_serial(max_size).size(); }, repeats);
    Timing ea_par = timed([&] { return enumerate_effect_algebras(max_size).size(); }, repeats);
    std::printf("effect algebras: %zu classes  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
                ea_serial.count, ea_serial.seconds, ea_par.seconds,
                ea_serial.seconds / ea_par.seconds);

    Timing em_serial = timed(
        [&] { return enumerate_effect_monoids_serial(max_size).size(); }, repeats);
    Timing em_par = timed([&] { return enumerate_effect_monoids(max_size).size(); }, repeats);
    std::printf("effect monoids:  %zu classes  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
                em_serial.count, em_serial.seconds, em_par.seconds,
                em_serial.seconds / em_par.seconds);

    if (ea_serial.count != ea_par.count || em_serial.count != em_par.count) {
        std::printf("MISMATCH between serial and parallel streams\n");
        return 1;
    }

    auto serial = enumerate_effect_algebras_serial(max_size);
    auto parallel = enumerate_effect_algebras(max_size);
    for (size_t i = 0; i < serial.size(); ++i)
        if (canonical_ea_key(serial[i]) != canonical_ea_key(parallel[i])) {
            std::printf("MISMATCH at stream position %zu\n", i);
            return 1;
        }
    std::printf("streams agree\n");
    return 0;
}
