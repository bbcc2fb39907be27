#pragma once

#include "fuzzyseg/pattern.hpp"
#include "fuzzyseg/report.hpp"

#include <vector>

namespace fuzzyseg {

/// Unit-length specialization: a sequence of per-character degree tables and
/// a threshold.
struct FuzzyPattern {
    Alphabet alphabet;
    std::vector<SymbolSpec> symbols; // all char_table
    Degree mu;

    int size() const { return static_cast<int>(symbols.size()); }
    const SymbolSpec& symbol(int k) const { return symbols[static_cast<std::size_t>(k) - 1]; }
    void validate() const;

    /// Requires lambda_min == lambda_max == 1 and char_table symbols only.
    static FuzzyPattern from_pattern(const Pattern& pattern);
    Pattern to_pattern() const;
};

/// All (P, mu)-match positions, ascending, 1-indexed. Single left-to-right
/// scan with O(m) state: the border stack of the currently matched window.
std::vector<int> fuzzy_string_matching(std::string_view text, const FuzzyPattern& pattern,
                                       RunCounters* counters = nullptr);

/// Checks every start position directly; the completeness oracle.
std::vector<int> naive_match(std::string_view text, const FuzzyPattern& pattern);

} // namespace fuzzyseg
