#include "fuzzyseg/oracle.hpp"

#include "fuzzyseg/errors.hpp"

namespace fuzzyseg {

namespace {

struct Budget {
    std::uint64_t left;
    void spend() {
        if (left == 0)
            throw enumeration_limit_error("brute-force enumeration exceeded its candidate cap");
        --left;
    }
};

} // namespace

std::vector<Segmentation> enumerate_segmentations(std::string_view text, const Pattern& pattern,
                                                  const EnumerationLimits& limits) {
    pattern.validate();
    validate_text(text, pattern.alphabet);

    const int n = static_cast<int>(text.size());
    const int m = pattern.size();
    std::vector<Segmentation> out;
    Budget budget{limits.max_candidates};

    Segmentation current;
    current.segments.resize(static_cast<std::size_t>(m));
    current.degrees.resize(static_cast<std::size_t>(m));

    auto place = [&](auto&& self, int pos, int k) -> void {
        if (k == m) {
            out.push_back(current);
            return;
        }
        for (int len = pattern.lambda_min; len <= pattern.lambda_max; ++len) {
            const int hi = pos + len - 1;
            if (hi > n) break;
            budget.spend();
            const Degree d = degree_of(pattern.symbol(k + 1), slice(text, {pos, hi}));
            if (d >= pattern.mu) {
                current.segments[static_cast<std::size_t>(k)] = {pos, hi};
                current.degrees[static_cast<std::size_t>(k)] = d;
                self(self, hi + 1, k + 1);
            }
        }
    };
    for (int start = 1; start + m * pattern.lambda_min - 1 <= n; ++start)
        place(place, start, 0);
    return out;
}

bool check_valid(std::string_view text, const Pattern& pattern, const Segmentation& candidate) {
    pattern.validate();
    const int n = static_cast<int>(text.size());
    if (static_cast<int>(candidate.segments.size()) != pattern.size()) return false;
    for (std::size_t k = 0; k < candidate.segments.size(); ++k) {
        const Segment seg = candidate.segments[k];
        if (seg.low < 1 || seg.high > n || seg.low > seg.high) return false;
        if (seg.length() < pattern.lambda_min || seg.length() > pattern.lambda_max) return false;
        if (k > 0 && candidate.segments[k - 1].high + 1 != seg.low) return false;
        if (degree_of(pattern.symbol(static_cast<int>(k) + 1), slice(text, seg)) < pattern.mu)
            return false;
    }
    return true;
}

std::pair<Degree, std::vector<Decomposition>> best_decomposition(std::string_view text,
                                                                 const GlobalProblem& problem,
                                                                 const EnumerationLimits& limits) {
    problem.validate();
    validate_text(text, problem.alphabet);
    const int n = static_cast<int>(text.size());
    const int m = problem.size();
    if (static_cast<long long>(m) * problem.lambda > n)
        throw infeasible_error("infeasible: m * lambda exceeds n");

    Budget budget{limits.max_candidates};
    Degree best = Degree::zero();
    bool have_any = false;
    std::vector<Decomposition> witnesses;

    Decomposition current;
    current.segments.resize(static_cast<std::size_t>(m));
    current.degrees.resize(static_cast<std::size_t>(m));

    auto place = [&](auto&& self, int pos, int k, Degree acc) -> void {
        budget.spend();
        if (k == m - 1) {
            if (n - pos + 1 < problem.lambda) return;
            const Degree d = degree_of(problem.symbol(m), slice(text, {pos, n}));
            const Degree v = accumulate(problem.accumulator, acc, d);
            current.segments[static_cast<std::size_t>(k)] = {pos, n};
            current.degrees[static_cast<std::size_t>(k)] = d;
            current.value = v;
            if (!have_any || v > best) {
                have_any = true;
                best = v;
                witnesses.assign(1, current);
            } else if (v == best) {
                witnesses.push_back(current);
            }
            return;
        }
        // Leave room for the remaining m-k-1 segments of length >= lambda.
        const int max_hi = n - (m - k - 1) * problem.lambda;
        for (int hi = pos + problem.lambda - 1; hi <= max_hi; ++hi) {
            const Degree d = degree_of(problem.symbol(k + 1), slice(text, {pos, hi}));
            current.segments[static_cast<std::size_t>(k)] = {pos, hi};
            current.degrees[static_cast<std::size_t>(k)] = d;
            self(self, hi + 1, k + 1, accumulate(problem.accumulator, acc, d));
        }
    };
    place(place, 1, 0, Degree::one());
    return {best, std::move(witnesses)};
}

} // namespace fuzzyseg
