// Command-line front end: segment | match | decompose | oracle | bench.
// Exit codes: 0 success, 1 input error, 2 infeasible constraints.

#include "fuzzyseg/bench.hpp"
#include "fuzzyseg/errors.hpp"
#include "fuzzyseg/format.hpp"
#include "fuzzyseg/global_seg.hpp"
#include "fuzzyseg/local_seg.hpp"
#include "fuzzyseg/matching.hpp"
#include "fuzzyseg/oracle.hpp"
#include "fuzzyseg/pattern_file.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

namespace {

using namespace fuzzyseg;

const Pattern& require_local(const ParsedProblem& problem, const char* subcommand) {
    if (const auto* local = std::get_if<Pattern>(&problem)) return *local;
    throw input_error(std::string(subcommand) +
                      " needs a local pattern file (with mu), got a global one");
}

const GlobalProblem& require_global(const ParsedProblem& problem, const char* subcommand) {
    if (const auto* global = std::get_if<GlobalProblem>(&problem)) return *global;
    throw input_error(std::string(subcommand) +
                      " needs a global pattern file (with accumulator), got a local one");
}

// Buffered per text so concurrent processing keeps output deterministic.
void emit_per_text(const std::vector<std::string>& paths, const std::vector<std::string>& blocks) {
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        if (paths.size() > 1) std::cout << "## " << paths[t] << "\n";
        std::cout << blocks[t];
    }
}

int run_segment(const std::string& pattern_path, const std::vector<std::string>& text_paths,
                bool verbose) {
    const ParsedProblem problem = load_pattern_file(pattern_path);
    const Pattern& pattern = require_local(problem, "segment");

    std::vector<std::string> texts(text_paths.size());
    for (std::size_t t = 0; t < text_paths.size(); ++t)
        texts[t] = load_text_file(text_paths[t], pattern.alphabet);

    std::vector<std::string> blocks(texts.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (texts.size() > 1 && !verbose)
    for (std::size_t t = 0; t < texts.size(); ++t) {
        try {
            std::ostringstream out;
            const auto found =
                sc_heuristic(texts[t], pattern, nullptr, verbose ? &std::cerr : nullptr);
            for (const Segmentation& seg : found) out << format_segmentation(seg) << "\n";
            blocks[t] = out.str();
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    emit_per_text(text_paths, blocks);
    return 0;
}

int run_match(const std::string& pattern_path, const std::vector<std::string>& text_paths,
              bool zero_index) {
    const ParsedProblem problem = load_pattern_file(pattern_path);
    const FuzzyPattern pattern = FuzzyPattern::from_pattern(require_local(problem, "match"));

    std::vector<std::string> blocks;
    for (const std::string& path : text_paths) {
        const std::string text = load_text_file(path, pattern.alphabet);
        std::ostringstream out;
        for (int pos : fuzzy_string_matching(text, pattern))
            out << (zero_index ? pos - 1 : pos) << "\n";
        blocks.push_back(out.str());
    }
    emit_per_text(text_paths, blocks);
    return 0;
}

int run_decompose(const std::string& pattern_path, const std::string& text_path, bool serial,
                  const std::string& dump_tables_path) {
    const ParsedProblem problem = load_pattern_file(pattern_path);
    const GlobalProblem& global = require_global(problem, "decompose");
    const std::string text = load_text_file(text_path, global.alphabet);

    const DpTables tables =
        serial ? gs_memoization_serial(text, global) : gs_memoization(text, global);
    if (!dump_tables_path.empty()) {
        std::ofstream dump(dump_tables_path, std::ios::binary);
        if (!dump) throw input_error("cannot open dump file " + dump_tables_path);
        dump << tables.dump_tsv();
    }
    std::cout << format_decomposition(gs_extract(tables, text, global));
    return 0;
}

int run_oracle(const std::string& mode, const std::string& pattern_path,
               const std::string& text_path, std::uint64_t max_candidates) {
    const ParsedProblem problem = load_pattern_file(pattern_path);
    const EnumerationLimits limits{max_candidates};

    if (mode == "segment") {
        const Pattern& pattern = require_local(problem, "oracle segment");
        const std::string text = load_text_file(text_path, pattern.alphabet);
        for (const Segmentation& seg : enumerate_segmentations(text, pattern, limits))
            std::cout << format_segmentation(seg) << "\n";
        return 0;
    }
    if (mode == "match") {
        const FuzzyPattern pattern =
            FuzzyPattern::from_pattern(require_local(problem, "oracle match"));
        const std::string text = load_text_file(text_path, pattern.alphabet);
        for (int pos : naive_match(text, pattern)) std::cout << pos << "\n";
        return 0;
    }
    if (mode == "decompose") {
        const GlobalProblem& global = require_global(problem, "oracle decompose");
        const std::string text = load_text_file(text_path, global.alphabet);
        const auto [value, witnesses] = best_decomposition(text, global, limits);
        std::cout << value.str() << "\n";
        for (const Decomposition& d : witnesses) std::cout << format_segments(d.segments) << "\n";
        return 0;
    }
    throw input_error("unknown oracle mode \"" + mode + "\"");
}

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> sizes;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw input_error("bad --sizes entry \"" + item + "\"");
        }
    }
    if (sizes.empty()) throw input_error("--sizes must name at least one size");
    return sizes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy-pattern text segmentation, matching, and decomposition"};
    app.require_subcommand(1);

    std::string pattern_path, text_path, oracle_mode, dump_tables_path, sizes_csv, mu_text;
    std::vector<std::string> text_paths;
    bool zero_index = false, verbose = false, serial = false, compare_serial = false;
    std::uint64_t max_candidates = 1'000'000;
    BenchConfig bench_config;

    auto* segment = app.add_subcommand("segment", "find valid segmentations (SC heuristic)");
    segment->add_option("pattern", pattern_path, "pattern file")->required();
    segment->add_option("text", text_paths, "text file(s)")->required();
    segment->add_flag("--verbose", verbose, "dump the prefix structure to stderr");

    auto* match = app.add_subcommand("match", "find all fuzzy match positions");
    match->add_option("pattern", pattern_path, "pattern file")->required();
    match->add_option("text", text_paths, "text file(s)")->required();
    match->add_flag("--zero-index", zero_index, "0-indexed output positions");

    auto* decompose = app.add_subcommand("decompose", "optimal whole-text decomposition");
    decompose->add_option("pattern", pattern_path, "pattern file")->required();
    decompose->add_option("text", text_path, "text file")->required();
    decompose->add_flag("--serial", serial, "use the serial reference kernel");
    decompose->add_option("--dump-tables", dump_tables_path, "write the s matrix as TSV");

    auto* oracle = app.add_subcommand("oracle", "brute-force reference solvers");
    oracle->add_option("mode", oracle_mode, "segment | match | decompose")->required();
    oracle->add_option("pattern", pattern_path, "pattern file")->required();
    oracle->add_option("text", text_path, "text file")->required();
    oracle->add_option("--max-candidates", max_candidates, "enumeration cap");

    auto* bench = app.add_subcommand("bench", "synthetic size-ladder benchmark (TSV report)");
    std::string bench_mode = "match";
    bench->add_option("--mode", bench_mode, "match | segment | decompose");
    bench->add_option("--sizes", sizes_csv, "comma-separated text sizes");
    bench->add_option("--m", bench_config.m, "pattern length");
    bench->add_option("--lambda1", bench_config.lambda1, "minimum segment length");
    bench->add_option("--lambda2", bench_config.lambda2, "maximum segment length");
    bench->add_option("--alphabet-size", bench_config.alphabet_size, "alphabet size");
    bench->add_option("--mu", mu_text, "matching threshold");
    bench->add_option("--seed", bench_config.seed, "RNG seed");
    bench->add_flag("--compare-serial", compare_serial,
                    "decompose: also time the serial reference");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (segment->parsed()) return run_segment(pattern_path, text_paths, verbose);
        if (match->parsed()) return run_match(pattern_path, text_paths, zero_index);
        if (decompose->parsed())
            return run_decompose(pattern_path, text_path, serial, dump_tables_path);
        if (oracle->parsed())
            return run_oracle(oracle_mode, pattern_path, text_path, max_candidates);
        if (bench->parsed()) {
            if (bench_mode == "match")
                bench_config.mode = BenchMode::match;
            else if (bench_mode == "segment")
                bench_config.mode = BenchMode::segment;
            else if (bench_mode == "decompose")
                bench_config.mode = BenchMode::decompose;
            else
                throw input_error("unknown bench mode \"" + bench_mode + "\"");
            if (!sizes_csv.empty()) bench_config.sizes = parse_sizes(sizes_csv);
            if (!mu_text.empty()) bench_config.mu = Degree::parse(mu_text);
            bench_config.compare_serial = compare_serial;
            std::cout << bench_tsv(run_bench(bench_config));
            return 0;
        }
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
