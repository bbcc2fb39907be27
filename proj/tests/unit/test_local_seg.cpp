#include "fuzzyseg/errors.hpp"
#include "fuzzyseg/local_seg.hpp"
#include "fuzzyseg/matching.hpp"
#include "fuzzyseg/oracle.hpp"

#include "../support/worked_examples.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace fuzzyseg;

namespace {

std::vector<std::vector<Segment>> segment_lists(const std::vector<Segmentation>& found) {
    std::vector<std::vector<Segment>> out;
    for (const auto& seg : found) out.push_back(seg.segments);
    return out;
}

Pattern random_pattern(std::mt19937_64& rng, int m) {
    Pattern pattern;
    pattern.alphabet = wx::binary();
    pattern.lambda_min = 1 + static_cast<int>(rng() % 3);
    pattern.lambda_max = pattern.lambda_min + static_cast<int>(rng() % 3);
    pattern.mu = Degree::from_ratio(static_cast<std::int64_t>(rng() % 5), 4);
    for (int k = 0; k < m; ++k) {
        const std::string chars = rng() % 3 == 0 ? "01" : (rng() % 2 ? "1" : "0");
        const std::string name = "p" + std::to_string(k);
        pattern.symbols.push_back(rng() % 2 ? SymbolSpec::relative_count(name, pattern.alphabet, chars)
                                            : SymbolSpec::max_run(name, pattern.alphabet, chars));
    }
    return pattern;
}

std::string random_binary(std::mt19937_64& rng, int n) {
    std::string text(static_cast<std::size_t>(n), '0');
    for (auto& c : text) c = rng() % 2 ? '1' : '0';
    return text;
}

} // namespace

TEST_CASE("capture-trace fixture: two segmentations in discovery order") {
    const auto found = sc_heuristic(wx::capture_trace_text(), wx::capture_trace_pattern());
    REQUIRE(found.size() == 2);

    CHECK(found[0].segments ==
          std::vector<Segment>{{6, 8}, {9, 11}, {12, 13}, {14, 15}});
    CHECK(found[0].degrees ==
          std::vector<Degree>{Degree::from_ratio(2, 3), Degree::from_ratio(2, 3), Degree::one(),
                              Degree::one()});

    CHECK(found[1].segments ==
          std::vector<Segment>{{12, 13}, {14, 15}, {16, 18}, {19, 20}});

    // A valid segmentation the heuristic does not discover.
    const std::vector<Segment> missed{{7, 8}, {9, 11}, {12, 13}, {14, 15}};
    for (const auto& seg : found) CHECK(seg.segments != missed);
}

TEST_CASE("no room for m segments yields empty output") {
    const Pattern pattern = wx::capture_trace_pattern(); // m=4, lambda_min=2
    CHECK(sc_heuristic("0101110", pattern).empty()); // n=7 < 8
}

TEST_CASE("text outside the alphabet is rejected") {
    CHECK_THROWS_AS(sc_heuristic("01x1", wx::capture_trace_pattern()), input_error);
}

TEST_CASE("adversarial instances: the heuristic finds one of lambda2 segmentations") {
    SUBCASE("m=2, lambda2=3") {
        const auto [text, pattern] = adversarial_instance(2, 3);
        CHECK(text == "00100200");
        CHECK(enumerate_segmentations(text, pattern).size() == 3);
        CHECK(sc_heuristic(text, pattern).size() == 1);
    }
    SUBCASE("m=1, lambda2=2") {
        const auto [text, pattern] = adversarial_instance(1, 2);
        CHECK(text == "010");
        CHECK(enumerate_segmentations(text, pattern).size() == 2);
        CHECK(sc_heuristic(text, pattern).size() == 1);
    }
    SUBCASE("m=3, lambda2=2") {
        const auto [text, pattern] = adversarial_instance(3, 2);
        CHECK(text == "0102030");
        const auto oracle = segment_lists(enumerate_segmentations(text, pattern));
        const auto heuristic = segment_lists(sc_heuristic(text, pattern));
        REQUIRE(heuristic.size() == 1);
        CHECK(oracle.size() == 2);
        CHECK(std::find(oracle.begin(), oracle.end(), heuristic[0]) != oracle.end());
    }
}

TEST_CASE("emitted segmentations are valid, oracle-known, and duplicate-free") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 500; ++t) {
        const int m = 1 + static_cast<int>(rng() % 5);
        const Pattern pattern = random_pattern(rng, m);
        const std::string text = random_binary(rng, 1 + static_cast<int>(rng() % 40));

        const auto found = sc_heuristic(text, pattern);
        const auto oracle = segment_lists(enumerate_segmentations(text, pattern));

        std::set<std::vector<std::pair<int, int>>> seen;
        for (const Segmentation& seg : found) {
            REQUIRE(check_valid(text, pattern, seg));
            REQUIRE(std::find(oracle.begin(), oracle.end(), seg.segments) != oracle.end());
            std::vector<std::pair<int, int>> key;
            for (const Segment s : seg.segments) key.emplace_back(s.low, s.high);
            REQUIRE(seen.insert(key).second); // no duplicates
        }
    }
}

TEST_CASE("unit window specialization finds every match position") {
    std::mt19937_64 rng(42);
    const Alphabet ab = Alphabet::of("abc");
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 25);
        const int m = 1 + static_cast<int>(rng() % 5);
        std::string text(static_cast<std::size_t>(n), 'a');
        for (auto& c : text) c = "abc"[rng() % 3];

        FuzzyPattern fuzzy;
        fuzzy.alphabet = ab;
        fuzzy.mu = Degree::from_ratio(1 + static_cast<std::int64_t>(rng() % 4), 4);
        for (int k = 0; k < m; ++k) {
            std::map<char, Degree> table;
            for (char c : {'a', 'b', 'c'})
                table[c] = Degree::from_ratio(static_cast<std::int64_t>(rng() % 5), 4);
            fuzzy.symbols.push_back(
                SymbolSpec::char_table("t" + std::to_string(k), ab, std::move(table)));
        }

        const auto found = sc_heuristic(text, fuzzy.to_pattern());
        std::vector<int> starts;
        for (const auto& seg : found) starts.push_back(seg.segments.front().low);
        REQUIRE(starts == naive_match(text, fuzzy));
    }
}

TEST_CASE("work stays within the amortized envelope") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 300; ++t) {
        const int m = 1 + static_cast<int>(rng() % 5);
        const Pattern pattern = random_pattern(rng, m);
        const int n = 5 + static_cast<int>(rng() % 56);
        const std::string text = random_binary(rng, n);

        RunCounters counters;
        sc_heuristic(text, pattern, &counters);
        const double envelope = 8.0 * m * n * pattern.lambda_max / pattern.lambda_min;
        REQUIRE(static_cast<double>(counters.structure_ops()) <= envelope);
        REQUIRE(counters.state_high_water <= static_cast<std::size_t>(4 * m));
    }
}

TEST_CASE("verbose trace dumps structure states") {
    std::ostringstream trace;
    sc_heuristic(wx::capture_trace_text(), wx::capture_trace_pattern(), nullptr, &trace);
    CHECK(trace.str().find("extend @1") != std::string::npos);
    CHECK(trace.str().find("(1, 6-8, 0)") != std::string::npos);
}

TEST_CASE("adversarial generator rejects unsupported shapes") {
    CHECK_THROWS_AS(adversarial_instance(0, 3), input_error);
    CHECK_THROWS_AS(adversarial_instance(10, 3), input_error);
    CHECK_THROWS_AS(adversarial_instance(2, 1), input_error);
}
