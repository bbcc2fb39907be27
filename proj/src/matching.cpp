#include "fuzzyseg/matching.hpp"

#include "fuzzyseg/errors.hpp"

namespace fuzzyseg {

void FuzzyPattern::validate() const {
    if (symbols.empty()) throw input_error("fuzzy pattern must contain at least one symbol");
    for (const auto& sym : symbols)
        if (sym.kind() != SymbolKind::char_table)
            throw input_error("fuzzy pattern symbol '" + sym.name() +
                              "' must be a char_table (unit arity)");
}

FuzzyPattern FuzzyPattern::from_pattern(const Pattern& pattern) {
    pattern.validate();
    if (pattern.lambda_min != 1 || pattern.lambda_max != 1)
        throw input_error("fuzzy string matching requires lambda_min == lambda_max == 1");
    FuzzyPattern out{pattern.alphabet, pattern.symbols, pattern.mu};
    out.validate();
    return out;
}

Pattern FuzzyPattern::to_pattern() const {
    return Pattern{alphabet, symbols, 1, 1, mu};
}

std::vector<int> fuzzy_string_matching(std::string_view text, const FuzzyPattern& pattern,
                                       RunCounters* counters) {
    pattern.validate();
    validate_text(text, pattern.alphabet);

    const int n = static_cast<int>(text.size());
    const int m = pattern.size();
    std::vector<int> positions;
    if (m > n) return positions;

    // q = matched window length; borders = ascending positive border lengths
    // of the window (exact, so the scan is both sound and complete).
    int q = 0;
    std::vector<int> borders;
    borders.reserve(static_cast<std::size_t>(m));

    auto char_degree = [&](int symbol_pos, char c) {
        if (counters) ++counters->degree_evals;
        return pattern.symbol(symbol_pos).table_degree(c);
    };
    auto pop_to_border = [&] {
        if (counters) ++counters->reduce_calls;
        if (borders.empty()) {
            q = 0;
        } else {
            q = borders.back();
            borders.pop_back();
        }
    };

    for (int i = 1; i <= n; ++i) {
        const char c = text[i - 1];
        while (q > 0 && char_degree(q + 1, c) < pattern.mu) pop_to_border();
        if (char_degree(q + 1, c) >= pattern.mu) {
            std::vector<int> next;
            next.reserve(borders.size() + 1);
            if (q > 0) {
                if (char_degree(1, c) >= pattern.mu) next.push_back(1);
                for (int b : borders)
                    if (char_degree(b + 1, c) >= pattern.mu) next.push_back(b + 1);
            }
            borders = std::move(next);
            ++q;
            if (counters) {
                ++counters->extend_calls;
                counters->note_state(borders.size() + 1);
            }
        }
        if (q == m) {
            positions.push_back(i - m + 1);
            pop_to_border();
        }
    }
    return positions;
}

std::vector<int> naive_match(std::string_view text, const FuzzyPattern& pattern) {
    pattern.validate();
    validate_text(text, pattern.alphabet);

    const int n = static_cast<int>(text.size());
    const int m = pattern.size();
    std::vector<int> positions;
    for (int s = 1; s + m - 1 <= n; ++s) {
        bool all = true;
        for (int k = 1; k <= m && all; ++k)
            all = pattern.symbol(k).table_degree(text[s + k - 2]) >= pattern.mu;
        if (all) positions.push_back(s);
    }
    return positions;
}

} // namespace fuzzyseg
