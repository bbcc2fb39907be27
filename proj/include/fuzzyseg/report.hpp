#pragma once

#include <cstddef>
#include <cstdint>

namespace fuzzyseg {

/// Exact event counts gathered during an algorithm run. Backs the complexity
/// shape checks (counter growth under size doubling) and the O(m) extra-space
/// check (state_high_water).
struct RunCounters {
    std::uint64_t reduce_calls = 0;
    std::uint64_t extend_calls = 0;
    std::uint64_t look_ahead_calls = 0;
    std::uint64_t degree_evals = 0;  // per-symbol degree checks in the scans
    std::uint64_t cells = 0;         // DP inner-loop candidates examined

    // multi-queue / multi-stack accounting
    std::uint64_t queue_pushes = 0;
    std::uint64_t queue_pops = 0;
    std::uint64_t stack_pushes = 0;
    std::uint64_t stack_pops = 0;

    std::size_t state_high_water = 0; // max simultaneous structure entries

    std::uint64_t structure_ops() const { return reduce_calls + extend_calls + look_ahead_calls; }

    void note_state(std::size_t entries) {
        if (entries > state_high_water) state_high_water = entries;
    }
};

} // namespace fuzzyseg
