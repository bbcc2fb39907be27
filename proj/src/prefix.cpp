#include "fuzzyseg/prefix.hpp"

#include "fuzzyseg/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace fuzzyseg {

PrefixStructure::PrefixStructure(std::string_view text, const Pattern& pattern,
                                 RunCounters* counters)
    : text_(text), pattern_(&pattern), counters_(counters) {
    pattern.validate();
}

Degree PrefixStructure::component_degree(int pattern_pos, Segment seg) const {
    if (counters_) ++counters_->degree_evals;
    return degree_of(pattern_->symbol(pattern_pos), slice(text_, seg));
}

std::vector<int> PrefixStructure::next_borders(Segment y) const {
    // Borders of x.y of length t require the last t-1 components of x to
    // match P[1..t-1] (t-1 is a border of x, or 0) and y to match P[t].
    // A single-component array has no proper border.
    std::vector<int> next;
    if (x_.empty()) return next;
    if (component_degree(1, y) >= pattern_->mu) next.push_back(1);
    for (int b : borders_)
        if (component_degree(b + 1, y) >= pattern_->mu) next.push_back(b + 1);
    return next; // ascending because borders_ is
}

void PrefixStructure::extend(Segment y) {
    const int q = length();
    if (q >= pattern_->size())
        throw std::logic_error("extend on a full prefix structure (q == m)");
    if (y.low < 1 || y.high > static_cast<int>(text_.size()) || y.low > y.high)
        throw input_error("segment [" + std::to_string(y.low) + ", " + std::to_string(y.high) +
                          "] out of text range");
    if (y.length() < pattern_->lambda_min || y.length() > pattern_->lambda_max)
        throw input_error("segment length " + std::to_string(y.length()) +
                          " outside [lambda_min, lambda_max]");
    if (q > 0 && y.low != x_.back().high + 1)
        throw input_error("segment [" + std::to_string(y.low) + ", " + std::to_string(y.high) +
                          "] is not adjacent to the structure tail");

    std::vector<int> next = next_borders(y);
    x_.push_back(y);
    pi_.push_back(next.empty() ? 0 : next.back());
    borders_ = std::move(next);
    if (counters_) {
        ++counters_->extend_calls;
        ++counters_->queue_pushes;
        ++counters_->stack_pushes;
    }
    note_state();
}

void PrefixStructure::reduce() {
    const int q = length();
    if (q == 0) throw std::logic_error("reduce on an empty prefix structure");

    const int keep = pi_.back(); // longest proper border of the full array
    const int drop = q - keep;
    for (int i = 0; i < drop; ++i) x_.pop_front();
    pi_.resize(static_cast<std::size_t>(keep));
    if (counters_) {
        ++counters_->reduce_calls;
        counters_->queue_pops += static_cast<std::uint64_t>(drop);
        counters_->stack_pops += static_cast<std::uint64_t>(drop);
    }

    // The kept pi entries described prefixes of the old array; rebuild them
    // for the shifted one with the same border recurrence extend uses.
    borders_.clear();
    std::vector<int> current;
    for (int i = 0; i < keep; ++i) {
        std::vector<int> next;
        if (i > 0) {
            if (component_degree(1, x_[static_cast<std::size_t>(i)]) >= pattern_->mu)
                next.push_back(1);
            for (int b : current)
                if (component_degree(b + 1, x_[static_cast<std::size_t>(i)]) >= pattern_->mu)
                    next.push_back(b + 1);
        }
        pi_[static_cast<std::size_t>(i)] = next.empty() ? 0 : next.back();
        current = std::move(next);
    }
    borders_ = std::move(current);
    note_state();
}

void PrefixStructure::note_state() {
    if (counters_) counters_->note_state(x_.size() + pi_.size() + borders_.size());
}

std::string PrefixStructure::debug_dump() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < x_.size(); ++i)
        out << '(' << i + 1 << ", " << x_[i].low << '-' << x_[i].high << ", " << pi_[i] << ")\n";
    return out.str();
}

std::vector<int> brute_prefix_function(const Pattern& pattern, std::span<const std::string> xs) {
    pattern.validate();
    const int q = static_cast<int>(xs.size());
    const int m = pattern.size();
    std::vector<int> pi;
    pi.reserve(xs.size());
    for (int i = 1; i <= q; ++i) {
        int best = 0;
        for (int k = std::min(i - 1, m - 1); k >= 1 && best == 0; --k) {
            bool all = true;
            for (int t = 1; t <= k && all; ++t)
                all = degree_of(pattern.symbol(t), xs[static_cast<std::size_t>(i - k + t - 1)]) >=
                      pattern.mu;
            if (all) best = k;
        }
        pi.push_back(best);
    }
    return pi;
}

std::set<int> brute_borders(const Pattern& pattern, std::span<const std::string> xs) {
    pattern.validate();
    const int q = static_cast<int>(xs.size());
    const int m = pattern.size();
    std::set<int> result{0};
    for (int k = 1; k < q && k < m; ++k) {
        bool all = true;
        for (int t = 1; t <= k && all; ++t)
            all = degree_of(pattern.symbol(t), xs[static_cast<std::size_t>(q - k + t - 1)]) >=
                  pattern.mu;
        if (all) result.insert(k);
    }
    return result;
}

} // namespace fuzzyseg
