// Wall-clock comparison of the serial reference extension search against
// the OpenMP kernels, on the exhaustive pair sweep the verifier runs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lrgen/generic_ext.hpp"
#include "lrgen/verify.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int main(int argc, char** argv) {
    int max_b = 4;
    int max_free = 1;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--max-b") == 0 && i + 1 < argc)
            max_b = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--max-free") == 0 && i + 1 < argc)
            max_free = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: bench_oracle [--max-b N] [--max-free N]\n");
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("workload: all ordered pairs with b_N + b_M <= %d, free <= %d\n\n", max_b,
                max_free);

    lrgen::OracleOptions serial_opts;
    serial_opts.parallel = false;
    lrgen::OracleOptions parallel_opts;
    parallel_opts.parallel = true;

    // pair-level parallelism: the whole sweep, pairs distributed over threads
    auto t0 = Clock::now();
    lrgen::VerifyReport serial = lrgen::verify_main(max_b, max_free, serial_opts);
    double serial_time = seconds_since(t0);

    t0 = Clock::now();
    lrgen::VerifyReport parallel = lrgen::VerifyReport{};
    parallel = lrgen::verify_main(max_b, max_free, parallel_opts);
    double parallel_time = seconds_since(t0);

    std::printf("pair sweep, serial reference: %8.3f s  (%lld pairs, %zu failures)\n", serial_time,
                static_cast<long long>(serial.checked), serial.failures.size());
    std::printf("pair sweep, OpenMP:           %8.3f s  (%lld pairs, %zu failures)\n",
                parallel_time, static_cast<long long>(parallel.checked),
                parallel.failures.size());
    std::printf("speedup: %.2fx\n\n", serial_time / parallel_time);

    // candidate-level parallelism: the heaviest single pairs
    std::vector<lrgen::H1Object> objects = lrgen::all_objects_up_to(max_b, max_free);
    std::vector<std::pair<const lrgen::H1Object*, const lrgen::H1Object*>> heavy;
    for (const auto& n : objects)
        for (const auto& m : objects)
            if (n.b() + m.b() == max_b)
                heavy.emplace_back(&n, &m);

    t0 = Clock::now();
    std::size_t count_serial = 0;
    for (auto [n, m] : heavy)
        count_serial += lrgen::all_extensions_serial(*n, *m, serial_opts).size();
    double single_serial = seconds_since(t0);

    t0 = Clock::now();
    std::size_t count_parallel = 0;
    for (auto [n, m] : heavy)
        count_parallel += lrgen::all_extensions_parallel(*n, *m, parallel_opts).size();
    double single_parallel = seconds_since(t0);

    std::printf("per-pair search, serial reference: %8.3f s  (%zu extensions)\n", single_serial,
                count_serial);
    std::printf("per-pair search, OpenMP:           %8.3f s  (%zu extensions)\n", single_parallel,
                count_parallel);
    std::printf("speedup: %.2fx\n", single_serial / single_parallel);

    bool same = serial.failures == parallel.failures && count_serial == count_parallel;
    std::printf("\nresults identical: %s\n", same ? "yes" : "NO");
    return same && serial.failures.empty() ? 0 : 1;
}
