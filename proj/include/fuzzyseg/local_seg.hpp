#pragma once

#include "fuzzyseg/pattern.hpp"
#include "fuzzyseg/report.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fuzzyseg {

/// Segment-capture heuristic: scans the text once, capturing for each pattern
/// symbol the shortest matching segment found by look-ahead, and falling back
/// to the longest border of the captured prefix on mismatch. Emits valid
/// segmentations in discovery order — a subset of all valid ones.
///
/// With trace set, dumps the prefix structure after every change (one line
/// per (i, segment, pi[i])).
std::vector<Segmentation> sc_heuristic(std::string_view text, const Pattern& pattern,
                                       RunCounters* counters = nullptr,
                                       std::ostream* trace = nullptr);

/// The extreme-case instance family: text 0^(L-1) 1 0^(L-1) 2 ... 0^(L-1) m
/// 0^(L-1) over digit markers, with pattern symbols accepting exactly the
/// length-L windows containing marker i once. Exactly lambda2 valid
/// segmentations exist (starting at 1..lambda2); the heuristic finds one.
/// Requires 1 <= m <= 9.
std::pair<std::string, Pattern> adversarial_instance(int m, int lambda2);

} // namespace fuzzyseg
