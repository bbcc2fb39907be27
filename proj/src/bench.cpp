#include "fuzzyseg/bench.hpp"

#include "fuzzyseg/errors.hpp"
#include "fuzzyseg/local_seg.hpp"

#include <chrono>
#include <sstream>

namespace fuzzyseg {

namespace {

const char* mode_name(BenchMode mode) {
    switch (mode) {
    case BenchMode::match: return "match";
    case BenchMode::segment: return "segment";
    case BenchMode::decompose: return "decompose";
    }
    return "?";
}

double ms_since(std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(elapsed).count();
}

Degree random_degree(std::mt19937_64& rng) {
    static const int numerators[] = {0, 1, 2, 3, 4};
    return Degree::from_ratio(numerators[rng() % 5], 4);
}

} // namespace

Alphabet bench_alphabet(int size) {
    static const std::string pool = "0123456789abcdef";
    if (size < 1 || size > static_cast<int>(pool.size()))
        throw input_error("alphabet size must be in [1, 16]");
    return Alphabet::of(std::string_view(pool).substr(0, static_cast<std::size_t>(size)));
}

std::string random_text(const Alphabet& alphabet, int n, std::mt19937_64& rng) {
    std::string text(static_cast<std::size_t>(n), '\0');
    const std::string& chars = alphabet.chars();
    for (auto& c : text) c = chars[rng() % chars.size()];
    return text;
}

FuzzyPattern random_fuzzy_pattern(const Alphabet& alphabet, int m, Degree mu,
                                  std::mt19937_64& rng) {
    FuzzyPattern pattern;
    pattern.alphabet = alphabet;
    pattern.mu = mu;
    for (int k = 1; k <= m; ++k) {
        std::map<char, Degree> table;
        for (char c : alphabet.chars()) table[c] = random_degree(rng);
        pattern.symbols.push_back(
            SymbolSpec::char_table("t" + std::to_string(k), alphabet, std::move(table)));
    }
    return pattern;
}

Pattern random_local_pattern(const Alphabet& alphabet, int m, int lambda1, int lambda2, Degree mu,
                             std::mt19937_64& rng) {
    Pattern pattern;
    pattern.alphabet = alphabet;
    pattern.lambda_min = lambda1;
    pattern.lambda_max = lambda2;
    pattern.mu = mu;
    const std::string& chars = alphabet.chars();
    for (int k = 1; k <= m; ++k) {
        std::string subset;
        for (char c : chars)
            if (rng() % 2 == 0) subset.push_back(c);
        if (subset.empty()) subset.push_back(chars[rng() % chars.size()]);
        const std::string name = "s" + std::to_string(k);
        pattern.symbols.push_back(rng() % 2 == 0
                                      ? SymbolSpec::relative_count(name, alphabet, subset)
                                      : SymbolSpec::max_run(name, alphabet, subset));
    }
    return pattern;
}

GlobalProblem random_global_problem(const Alphabet& alphabet, int m, int lambda,
                                    AccumulatorKind accumulator, std::mt19937_64& rng) {
    GlobalProblem problem;
    const Pattern base = random_local_pattern(alphabet, m, lambda, lambda, Degree::zero(), rng);
    problem.alphabet = alphabet;
    problem.symbols = base.symbols;
    problem.lambda = lambda;
    problem.accumulator = accumulator;
    return problem;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    for (int n : config.sizes) {
        // Same seed at every size, problem drawn before the text: the ladder
        // varies n alone.
        std::mt19937_64 rng(config.seed);
        const Alphabet alphabet = bench_alphabet(config.alphabet_size);

        BenchRow row;
        row.mode = config.mode;
        row.n = n;
        row.m = config.m;

        switch (config.mode) {
        case BenchMode::match: {
            row.lambda1 = row.lambda2 = 1;
            const FuzzyPattern pattern = random_fuzzy_pattern(alphabet, config.m, config.mu, rng);
            const std::string text = random_text(alphabet, n, rng);
            const auto start = std::chrono::steady_clock::now();
            fuzzy_string_matching(text, pattern, &row.counters);
            row.wall_ms = ms_since(start);
            break;
        }
        case BenchMode::segment: {
            row.lambda1 = config.lambda1;
            row.lambda2 = config.lambda2;
            const Pattern pattern = random_local_pattern(alphabet, config.m, config.lambda1,
                                                         config.lambda2, config.mu, rng);
            const std::string text = random_text(alphabet, n, rng);
            const auto start = std::chrono::steady_clock::now();
            sc_heuristic(text, pattern, &row.counters);
            row.wall_ms = ms_since(start);
            break;
        }
        case BenchMode::decompose: {
            row.lambda1 = row.lambda2 = config.lambda1;
            const GlobalProblem problem = random_global_problem(
                alphabet, config.m, config.lambda1, AccumulatorKind::product, rng);
            const std::string text = random_text(alphabet, n, rng);
            const auto start = std::chrono::steady_clock::now();
            gs_memoization(text, problem, &row.counters);
            row.wall_ms = ms_since(start);
            if (config.compare_serial) {
                const auto serial_start = std::chrono::steady_clock::now();
                gs_memoization_serial(text, problem);
                row.serial_wall_ms = ms_since(serial_start);
            }
            break;
        }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string bench_tsv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "mode\tn\tm\tlambda1\tlambda2\treduce\textend\tlook_ahead\tdegree_evals\tcells"
           "\thigh_water\twall_ms\tserial_wall_ms\n";
    for (const BenchRow& row : rows) {
        out << mode_name(row.mode) << '\t' << row.n << '\t' << row.m << '\t' << row.lambda1
            << '\t' << row.lambda2 << '\t' << row.counters.reduce_calls << '\t'
            << row.counters.extend_calls << '\t' << row.counters.look_ahead_calls << '\t'
            << row.counters.degree_evals << '\t' << row.counters.cells << '\t'
            << row.counters.state_high_water << '\t' << row.wall_ms << '\t';
        if (row.serial_wall_ms >= 0)
            out << row.serial_wall_ms;
        else
            out << '-';
        out << '\n';
    }
    return out.str();
}

} // namespace fuzzyseg
