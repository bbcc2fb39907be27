#include "fuzzyseg/format.hpp"

#include <sstream>

namespace fuzzyseg {

std::string format_segmentation(const Segmentation& segmentation) {
    std::ostringstream out;
    for (std::size_t k = 0; k < segmentation.segments.size(); ++k) {
        if (k > 0) out << ' ';
        const Segment seg = segmentation.segments[k];
        out << seg.low << '-' << seg.high << ':' << segmentation.degrees[k].str();
    }
    return out.str();
}

std::string format_segments(std::span<const Segment> segments) {
    std::ostringstream out;
    for (std::size_t k = 0; k < segments.size(); ++k) {
        if (k > 0) out << ' ';
        out << segments[k].low << '-' << segments[k].high;
    }
    return out.str();
}

std::string format_decomposition(const Decomposition& decomposition) {
    return decomposition.value.str() + "\n" + format_segments(decomposition.segments) + "\n";
}

} // namespace fuzzyseg
