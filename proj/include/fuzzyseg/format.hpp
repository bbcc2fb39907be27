#pragma once

#include "fuzzyseg/global_seg.hpp"
#include "fuzzyseg/pattern.hpp"

#include <span>
#include <string>

namespace fuzzyseg {

/// "6-8:2/3 9-11:2/3 12-13:1 14-15:1"
std::string format_segmentation(const Segmentation& segmentation);

/// "1-5 6-8 9-12"
std::string format_segments(std::span<const Segment> segments);

/// Value line then segment line: "3/5\n1-5 6-8 9-12\n"
std::string format_decomposition(const Decomposition& decomposition);

} // namespace fuzzyseg
