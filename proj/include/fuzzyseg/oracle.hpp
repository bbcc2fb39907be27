#pragma once

#include "fuzzyseg/global_seg.hpp"
#include "fuzzyseg/pattern.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace fuzzyseg {

/// Guard for the exponential enumerations; exceeding the cap raises
/// enumeration_limit_error.
struct EnumerationLimits {
    std::uint64_t max_candidates = 1'000'000;
};

/// Every valid (P, lambda, mu)-segmentation, in lexicographic order of
/// (start position, length vector). Deliberately naive.
std::vector<Segmentation> enumerate_segmentations(std::string_view text, const Pattern& pattern,
                                                  const EnumerationLimits& limits = {});

/// True iff the candidate satisfies adjacency, the length window, and the
/// per-segment degree threshold.
bool check_valid(std::string_view text, const Pattern& pattern, const Segmentation& candidate);

/// The optimal accumulated value together with every decomposition attaining
/// it, in lexicographic order of cut points.
std::pair<Degree, std::vector<Decomposition>> best_decomposition(
    std::string_view text, const GlobalProblem& problem, const EnumerationLimits& limits = {});

} // namespace fuzzyseg
