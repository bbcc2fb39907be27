#pragma once

#include "fuzzyseg/degree.hpp"
#include "fuzzyseg/symbols.hpp"

#include <string_view>
#include <vector>

namespace fuzzyseg {

/// A 1-indexed inclusive text interval.
struct Segment {
    int low = 0;
    int high = 0;

    int length() const { return high - low + 1; }
    bool operator==(const Segment&) const = default;
    auto operator<=>(const Segment&) const = default;
};

/// Local segmentation problem: symbols P[1..m], segment length window
/// [lambda_min, lambda_max], minimum matching degree mu.
struct Pattern {
    Alphabet alphabet;
    std::vector<SymbolSpec> symbols;
    int lambda_min = 1;
    int lambda_max = 1;
    Degree mu;

    int size() const { return static_cast<int>(symbols.size()); }
    const SymbolSpec& symbol(int k) const { return symbols[static_cast<std::size_t>(k) - 1]; } // 1-indexed
    void validate() const;
};

/// m adjacent segments, each matching its pattern symbol with degree >= mu.
struct Segmentation {
    std::vector<Segment> segments;
    std::vector<Degree> degrees;

    bool operator==(const Segmentation&) const = default;
};

/// Rejects text containing characters outside the alphabet.
void validate_text(std::string_view text, const Alphabet& alphabet);

/// text[seg.low .. seg.high], 1-indexed inclusive.
std::string_view slice(std::string_view text, Segment seg);

} // namespace fuzzyseg
