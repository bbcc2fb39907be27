#include "fuzzyseg/local_seg.hpp"

#include "fuzzyseg/errors.hpp"
#include "fuzzyseg/prefix.hpp"

#include <ostream>

namespace fuzzyseg {

namespace {

Segmentation capture(std::string_view text, const Pattern& pattern,
                     const PrefixStructure& structure) {
    Segmentation out;
    int k = 1;
    for (Segment seg : structure.segments()) {
        out.segments.push_back(seg);
        out.degrees.push_back(degree_of(pattern.symbol(k), slice(text, seg)));
        ++k;
    }
    return out;
}

} // namespace

std::vector<Segmentation> sc_heuristic(std::string_view text, const Pattern& pattern,
                                       RunCounters* counters, std::ostream* trace) {
    pattern.validate();
    validate_text(text, pattern.alphabet);

    const int n = static_cast<int>(text.size());
    const int m = pattern.size();
    std::vector<Segmentation> found;
    PrefixStructure structure(text, pattern, counters);

    auto probe = [&](int i, int symbol_pos) {
        if (counters) ++counters->look_ahead_calls;
        return look_ahead(text, i, pattern.symbol(symbol_pos), pattern.lambda_min,
                          pattern.lambda_max, pattern.mu);
    };

    int i = 1;
    while (i <= n - pattern.lambda_min + 1) {
        // Mismatch loop: the look-ahead value is computed once per structure
        // length and reused below.
        std::optional<int> j;
        while (structure.length() > 0) {
            j = probe(i, structure.length() + 1);
            if (j) break;
            structure.reduce();
            if (trace) *trace << "reduce @" << i << "\n" << structure.debug_dump();
        }
        if (structure.length() == 0) j = probe(i, 1);

        if (j) {
            structure.extend({i, *j});
            if (trace) *trace << "extend @" << i << "\n" << structure.debug_dump();
        }
        if (structure.length() == m) {
            found.push_back(capture(text, pattern, structure));
            structure.reduce();
            if (trace) *trace << "emit+reduce @" << i << "\n" << structure.debug_dump();
        }
        i = increment(i, j);
    }
    return found;
}

std::pair<std::string, Pattern> adversarial_instance(int m, int lambda2) {
    if (m < 1 || m > 9) throw input_error("adversarial_instance supports 1 <= m <= 9");
    if (lambda2 < 2) throw input_error("adversarial_instance requires lambda2 >= 2");

    std::string alphabet_chars = "0";
    for (int i = 1; i <= m; ++i) alphabet_chars.push_back(static_cast<char>('0' + i));
    const Alphabet alphabet = Alphabet::of(alphabet_chars);

    const std::string filler(static_cast<std::size_t>(lambda2 - 1), '0');
    std::string text;
    for (int i = 1; i <= m; ++i) {
        text += filler;
        text.push_back(static_cast<char>('0' + i));
    }
    text += filler;

    Pattern pattern;
    pattern.alphabet = alphabet;
    for (int i = 1; i <= m; ++i)
        pattern.symbols.push_back(SymbolSpec::single_marker(
            "mark" + std::to_string(i), alphabet, static_cast<char>('0' + i), lambda2));
    pattern.lambda_min = lambda2;
    pattern.lambda_max = lambda2;
    pattern.mu = Degree::one();
    return {std::move(text), std::move(pattern)};
}

} // namespace fuzzyseg
