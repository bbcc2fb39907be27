#pragma once

#include "fuzzyseg/pattern.hpp"
#include "fuzzyseg/report.hpp"

#include <deque>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace fuzzyseg {

/// The running state of matched segments: the triplet <q, x, pi> plus the
/// border set of the current segment array.
///
/// x is a multi-queue of adjacent text segments (push at the back, multipop
/// from the front); pi is a multi-stack where pi[i] is the length of the
/// longest proper border of x[1..i] — the longest k <= i-1 such that the last
/// k segments of x[1..i] match P[1..k] with degree >= mu. The ascending
/// border stack holds every positive border length of the whole array; extend
/// derives the next border set from it with one degree check per entry, and
/// reduce pops its maximum. Border sets are exact for arbitrary component
/// arrays, matching componentwise or not.
class PrefixStructure {
public:
    PrefixStructure(std::string_view text, const Pattern& pattern,
                    RunCounters* counters = nullptr);

    int length() const { return static_cast<int>(x_.size()); } // q
    bool empty() const { return x_.empty(); }

    const std::deque<Segment>& segments() const { return x_; }
    /// pi(i) for i = 1..q as prefix_values()[i-1].
    const std::vector<int>& prefix_values() const { return pi_; }
    /// Positive border lengths of the whole current array, ascending.
    const std::vector<int>& border_lengths() const { return borders_; }

    /// Shrink to the longest proper border: keep the last pi[q] segments.
    /// Strictly decreases q. Throws std::logic_error on an empty structure.
    void reduce();

    /// Append segment y (adjacent to the current tail, length within
    /// [lambda_min, lambda_max]) and push the exact new pi value.
    void extend(Segment y);

    /// One line per (i, segment, pi[i]).
    std::string debug_dump() const;

private:
    Degree component_degree(int pattern_pos, Segment seg) const; // P[pattern_pos], 1-indexed
    std::vector<int> next_borders(Segment y) const;
    void note_state();

    std::string_view text_;
    const Pattern* pattern_;
    RunCounters* counters_;
    std::deque<Segment> x_;
    std::vector<int> pi_;
    std::vector<int> borders_;
};

/// Exhaustive x-prefix function over explicit string components; the
/// independent oracle for extend.
std::vector<int> brute_prefix_function(const Pattern& pattern, std::span<const std::string> xs);

/// All k in [0, q) such that the last k components of xs match P[1..k]
/// (0 is always present: the empty border).
std::set<int> brute_borders(const Pattern& pattern, std::span<const std::string> xs);

} // namespace fuzzyseg
