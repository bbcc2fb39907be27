#pragma once

#include "fuzzyseg/degree.hpp"
#include "fuzzyseg/pattern.hpp"
#include "fuzzyseg/report.hpp"

#include <string>
#include <vector>

namespace fuzzyseg {

/// Whole-text decomposition problem: m symbols, a minimum segment length
/// (no upper bound), and the accumulation operation combining per-segment
/// degrees. Feasible when m * lambda <= n.
struct GlobalProblem {
    Alphabet alphabet;
    std::vector<SymbolSpec> symbols;
    int lambda = 1;
    AccumulatorKind accumulator = AccumulatorKind::product;

    int size() const { return static_cast<int>(symbols.size()); }
    const SymbolSpec& symbol(int k) const { return symbols[static_cast<std::size_t>(k) - 1]; }
    void validate() const;
};

/// The DP matrices. s[i,j] is the optimal value of decomposing T[1..j] into i
/// segments (defined for i*lambda <= j <= n); b[i,j] (i >= 2) is the start of
/// the last segment in an optimal split, the largest maximizing k.
class DpTables {
public:
    DpTables(int m, int n, int lambda);

    Degree s(int i, int j) const { return s_[s_index(i, j)]; }
    int b(int i, int j) const { return b_[b_index(i, j)]; }

    int m() const { return m_; }
    int n() const { return n_; }
    int lambda() const { return lambda_; }
    bool s_defined(int i, int j) const;

    void set_s(int i, int j, Degree v) { s_[s_index(i, j)] = v; }
    void set_b(int i, int j, int k) { b_[b_index(i, j)] = k; }

    /// TSV of the s matrix ("p/q" cells, "-" outside the defined range).
    std::string dump_tsv() const;

    bool operator==(const DpTables& other) const = default;

private:
    std::size_t s_index(int i, int j) const;
    std::size_t b_index(int i, int j) const;

    int m_ = 0, n_ = 0, lambda_ = 1;
    std::vector<std::size_t> s_offsets_, b_offsets_; // dense row storage
    std::vector<Degree> s_;
    std::vector<int> b_;
};

/// An (m, lambda)-decomposition: m adjacent segments covering [1, n], each of
/// length >= lambda, with the accumulated value.
struct Decomposition {
    std::vector<Segment> segments;
    std::vector<Degree> degrees;
    Degree value;

    bool operator==(const Decomposition&) const = default;
};

/// Bottom-up table construction, O(m n^2) time / O(m n) space. Row cells are
/// independent given the previous row; the default entry point computes them
/// in parallel when OpenMP is enabled (results are identical to the serial
/// reference — the arithmetic is exact).
DpTables gs_memoization(std::string_view text, const GlobalProblem& problem,
                        RunCounters* counters = nullptr);

/// Serial reference implementation.
DpTables gs_memoization_serial(std::string_view text, const GlobalProblem& problem,
                               RunCounters* counters = nullptr);

/// Walks b backwards from (m, n) and returns the segments first-to-last.
Decomposition gs_extract(const DpTables& tables, std::string_view text,
                         const GlobalProblem& problem);

/// The optimal decomposition value s[m, n].
Degree sigma(std::string_view text, const GlobalProblem& problem);

} // namespace fuzzyseg
