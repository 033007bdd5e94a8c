// Compares the serial reference frontier expansion against the OpenMP
// kernel on the same (n, l, k) and checks that both reports agree.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "cyclefact/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cyclefact;

namespace {

template <typename F>
double time_ms(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"serial vs OpenMP frontier expansion"};
    int n = 8, l = 3, k = 3, repeat = 3, threads = 0;
    app.add_option("--n", n, "degree (<= 9)");
    app.add_option("--l", l, "cycle length");
    app.add_option("--k", k, "number of factors");
    app.add_option("--repeat", repeat, "repetitions per variant");
    app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
    CLI11_PARSE(app, argc, argv);

    try {
        ReachReport serial, parallel;
        double t_serial = 1e300, t_parallel = 1e300;
        for (int i = 0; i < repeat; ++i)
            t_serial = std::min(t_serial, time_ms([&] { serial = class_power_reach_serial(n, l, k); }));
        for (int i = 0; i < repeat; ++i)
            t_parallel =
                std::min(t_parallel, time_ms([&] { parallel = class_power_reach(n, l, k, threads); }));

        const bool same = serial.covered == parallel.covered &&
                          serial.reached_count == parallel.reached_count &&
                          serial.witness_missing.has_value() == parallel.witness_missing.has_value();
#ifdef _OPENMP
        std::cout << "openmp threads: " << (threads > 0 ? threads : omp_get_max_threads()) << "\n";
#else
        std::cout << "openmp: not enabled\n";
#endif
        std::cout << "reach(" << n << "," << l << "," << k << "): reached " << serial.reached_count
                  << ", covered " << (serial.covered ? "yes" : "no") << "\n";
        std::cout << "serial:   " << t_serial << " ms\n";
        std::cout << "parallel: " << t_parallel << " ms  (speedup x" << t_serial / t_parallel
                  << ")\n";
        std::cout << "reports agree: " << (same ? "yes" : "NO") << "\n";
        return same ? 0 : 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
