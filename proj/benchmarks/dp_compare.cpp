// Compares the OpenMP row-parallel DP kernel against the serial reference:
// verifies the tables are identical and reports wall times per ladder size.
//
//   dp_bench [n1,n2,...] [m] [lambda]     (defaults: 400,800,1600,3200  3  2)

#include "fuzzyseg/bench.hpp"
#include "fuzzyseg/global_seg.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace fuzzyseg;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(elapsed).count();
}

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes{400, 800, 1600, 3200};
    int m = 3;
    int lambda = 2;
    if (argc > 1) sizes = parse_sizes(argv[1]);
    if (argc > 2) m = std::stoi(argv[2]);
    if (argc > 3) lambda = std::stoi(argv[3]);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel entry point falls back to serial\n");
#endif
    std::printf("%8s %4s %7s %14s %14s %9s %7s\n", "n", "m", "lambda", "serial_ms", "parallel_ms",
                "speedup", "equal");

    bool all_equal = true;
    for (int n : sizes) {
        std::mt19937_64 rng(2024);
        const Alphabet alphabet = bench_alphabet(2);
        const std::string text = random_text(alphabet, n, rng);
        const GlobalProblem problem =
            random_global_problem(alphabet, m, lambda, AccumulatorKind::product, rng);

        DpTables serial(1, 1, 1), parallel(1, 1, 1);
        const double serial_ms = time_ms([&] { serial = gs_memoization_serial(text, problem); });
        const double parallel_ms = time_ms([&] { parallel = gs_memoization(text, problem); });
        const bool equal = serial == parallel;
        all_equal = all_equal && equal;
        std::printf("%8d %4d %7d %14.2f %14.2f %8.2fx %7s\n", n, m, lambda, serial_ms, parallel_ms,
                    parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "yes" : "NO");
    }
    return all_equal ? 0 : 1;
}
