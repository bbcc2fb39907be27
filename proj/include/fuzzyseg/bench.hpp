#pragma once

#include "fuzzyseg/global_seg.hpp"
#include "fuzzyseg/matching.hpp"
#include "fuzzyseg/pattern.hpp"
#include "fuzzyseg/report.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fuzzyseg {

enum class BenchMode { match, segment, decompose };

struct BenchConfig {
    BenchMode mode = BenchMode::match;
    std::vector<int> sizes{2000, 4000, 8000, 16000};
    int m = 4;
    int lambda1 = 2;
    int lambda2 = 3;
    int alphabet_size = 2;
    Degree mu = Degree::from_ratio(1, 2);
    std::uint64_t seed = 42;
    bool compare_serial = false; // decompose: also time the serial reference
};

struct BenchRow {
    BenchMode mode;
    int n = 0, m = 0, lambda1 = 0, lambda2 = 0;
    RunCounters counters;
    double wall_ms = 0.0;
    double serial_wall_ms = -1.0; // < 0 when not measured
};

/// Uniform random text over the first `alphabet.size()` characters.
std::string random_text(const Alphabet& alphabet, int n, std::mt19937_64& rng);

Alphabet bench_alphabet(int size);
FuzzyPattern random_fuzzy_pattern(const Alphabet& alphabet, int m, Degree mu,
                                  std::mt19937_64& rng);
Pattern random_local_pattern(const Alphabet& alphabet, int m, int lambda1, int lambda2, Degree mu,
                             std::mt19937_64& rng);
GlobalProblem random_global_problem(const Alphabet& alphabet, int m, int lambda,
                                    AccumulatorKind accumulator, std::mt19937_64& rng);

/// Runs the configured size ladder on synthetic inputs and returns one row
/// per size with exact operation counters and wall time.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_tsv(const std::vector<BenchRow>& rows);

} // namespace fuzzyseg
