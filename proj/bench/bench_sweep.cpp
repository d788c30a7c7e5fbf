// Serial vs OpenMP timings for the property sweeps and the shuffle product.
//   bench_sweep [grid] [repeats]

#include "klrsk/characters.hpp"
#include "klrsk/verify.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

using namespace klrsk;

namespace {

template <class F>
double best_of(int repeats, F&& f)
{
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv)
{
    const GridSpec grid = GridSpec::parse(argc > 1 ? argv[1] : "window=0..3,maxsegs=4,maxmult=2");
    const int repeats = argc > 2 ? std::stoi(argv[2]) : 3;
    std::printf("grid %s, %d threads, best of %d\n", grid.to_string().c_str(), omp_get_max_threads(), repeats);

    std::vector<CheckResult> serial, parallel;
    for (Exec ex : {Exec::Serial, Exec::Parallel}) {
        VerifyOptions o;
        o.grid = grid;
        o.exec = ex;
        auto& out = ex == Exec::Serial ? serial : parallel;
        best_of(repeats, [&] { out = run_all(o); });
    }
    std::printf("%-32s %10s %10s %8s\n", "check", "serial s", "omp s", "speedup");
    for (size_t i = 0; i < serial.size(); ++i) {
        const double s = serial[i].seconds, p = parallel[i].seconds;
        std::printf("%-32s %10.4f %10.4f %8.2f%s\n", serial[i].name.c_str(), s, p, p > 0 ? s / p : 0.0,
                    serial[i].pass == parallel[i].pass ? "" : "  MISMATCH");
    }

    // shuffle of two ladder characters with a few thousand words each
    const auto a = kr_char(parse_multisegment("[1,3]+[2,4]"));
    const auto b = kr_char(parse_multisegment("[0,2]+[3,4]"));
    GradedCharacter rs, rp;
    const double ts = best_of(repeats, [&] { rs = shuffle(a, b); });
    const double tp = best_of(repeats, [&] { rp = shuffle_parallel(a, b); });
    std::printf("%-32s %10.4f %10.4f %8.2f%s\n", "shuffle (height 11)", ts, tp, ts / tp,
                rs == rp ? "" : "  MISMATCH");
    return 0;
}
