#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "revinv/cli.hpp"
#include "revinv/faultlab.hpp"
#include "revinv/packed.hpp"

using namespace revinv;
using clk = std::chrono::steady_clock;

static double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main(int argc, char** argv) {
    const int workers = argc > 1 ? std::atoi(argv[1]) : 0;
    std::printf("workers=%d\n", resolve_workers(workers));
    std::printf("%-28s %12s %12s %8s\n", "case", "serial_ms", "parallel_ms", "same");

    const std::size_t sizes[][2] = {{10, 50}, {14, 200}, {18, 400}};
    for (auto [w, g] : sizes) {
        const auto c = random_toffoli_circuit(w, g, kDefaultBenchSeed);
        auto t0 = clk::now();
        const auto a = simulate_exhaustive(c);
        const double s = ms_since(t0);
        t0 = clk::now();
        const auto b = simulate_exhaustive_packed(c, kDefaultInputCap, workers);
        const double p = ms_since(t0);
        char name[64];
        std::snprintf(name, sizeof name, "exhaustive w=%zu g=%zu", w, g);
        std::printf("%-28s %12.2f %12.2f %8s\n", name, s, p, a == b ? "yes" : "NO");
    }

    const std::size_t fsizes[][2] = {{8, 30}, {10, 60}};
    for (auto [w, g] : fsizes) {
        auto c = random_toffoli_circuit(w, g, kDefaultBenchSeed + 1);
        c.garbage.assign(w, false);
        const auto table = simulate_exhaustive(c);
        const auto faults = fault_universe(c);
        auto t0 = clk::now();
        const auto a = propagation_masks_naive(c, table, faults);
        const double s = ms_since(t0);
        t0 = clk::now();
        const auto b = propagation_masks(c, table, faults, workers);
        const double p = ms_since(t0);
        char name[64];
        std::snprintf(name, sizeof name, "fault sweep w=%zu g=%zu", w, g);
        std::printf("%-28s %12.2f %12.2f %8s\n", name, s, p, a == b ? "yes" : "NO");
    }
    return 0;
}
