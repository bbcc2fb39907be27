#include "fuzzyseg/errors.hpp"
#include "fuzzyseg/matching.hpp"
#include "fuzzyseg/pattern_file.hpp"

#include "../support/worked_examples.hpp"

#include <doctest.h>

using namespace fuzzyseg;

namespace {

const char* kLocalDoc = R"({
  "alphabet": "01",
  "symbols": {
    "a0": {"kind": "relative_count", "chars": "0"},
    "a1": {"kind": "relative_count", "chars": "1"}
  },
  "pattern": ["a1", "a0", "a1"],
  "lambda_min": 2,
  "lambda_max": 3,
  "mu": "2/3"
})";

const char* kTableDoc = R"({
  "alphabet": "12345",
  "symbols": {
    "S": {"kind": "char_table",
          "table": {"1": "1", "2": "0.75", "3": "0.5", "4": "0.25", "5": "0"}},
    "M": {"kind": "char_table",
          "table": {"1": "0", "2": "0.75", "3": "1", "4": "0.75", "5": "0"}},
    "L": {"kind": "char_table",
          "table": {"1": "0", "2": "0.25", "3": "0.5", "4": "0.75", "5": "1"}}
  },
  "pattern": ["S", "M", "S", "L"],
  "mu": "0.75"
})";

const char* kGlobalDoc = R"({
  "alphabet": "01",
  "symbols": {
    "a0": {"kind": "relative_count", "chars": "0"},
    "a1": {"kind": "relative_count", "chars": "1"}
  },
  "pattern": ["a1", "a0", "a1"],
  "lambda_min": 2,
  "accumulator": "product"
})";

std::string patched(std::string doc, const std::string& from, const std::string& to) {
    const auto at = doc.find(from);
    REQUIRE(at != std::string::npos);
    return doc.replace(at, from.size(), to);
}

} // namespace

TEST_CASE("local pattern file round-trips to the in-memory fixture") {
    const ParsedProblem parsed = parse_pattern_file(kLocalDoc);
    REQUIRE(std::holds_alternative<Pattern>(parsed));
    const Pattern& pattern = std::get<Pattern>(parsed);

    const Pattern expected = wx::count_enum_pattern();
    CHECK(pattern.alphabet.chars() == expected.alphabet.chars());
    CHECK(pattern.symbols == expected.symbols);
    CHECK(pattern.lambda_min == expected.lambda_min);
    CHECK(pattern.lambda_max == expected.lambda_max);
    CHECK(pattern.mu == expected.mu);
}

TEST_CASE("char-table file parses decimals exactly and defaults lambda to 1") {
    const ParsedProblem parsed = parse_pattern_file(kTableDoc);
    REQUIRE(std::holds_alternative<Pattern>(parsed));
    const Pattern& pattern = std::get<Pattern>(parsed);
    CHECK(pattern.lambda_min == 1);
    CHECK(pattern.lambda_max == 1);
    CHECK(pattern.mu == Degree::from_ratio(3, 4));

    const FuzzyPattern fuzzy = FuzzyPattern::from_pattern(pattern);
    const FuzzyPattern expected = wx::sml_pattern();
    CHECK(fuzzy.symbols == expected.symbols);
    CHECK(fuzzy.mu == expected.mu);
}

TEST_CASE("global pattern file yields a global problem") {
    const ParsedProblem parsed = parse_pattern_file(kGlobalDoc);
    REQUIRE(std::holds_alternative<GlobalProblem>(parsed));
    const GlobalProblem& problem = std::get<GlobalProblem>(parsed);
    CHECK(problem.lambda == 2);
    CHECK(problem.accumulator == AccumulatorKind::product);
    CHECK(problem.symbols == wx::product_decomp_problem(2).symbols);

    const ParsedProblem min_parsed =
        parse_pattern_file(patched(kGlobalDoc, "\"product\"", "\"min\""));
    CHECK(std::get<GlobalProblem>(min_parsed).accumulator == AccumulatorKind::minimum);
}

TEST_CASE("diagnostics identify the offending field") {
    auto message_of = [](const std::string& doc) {
        try {
            parse_pattern_file(doc);
        } catch (const input_error& e) {
            return std::string(e.what());
        }
        return std::string("(no error)");
    };

    CHECK(message_of(patched(kLocalDoc, "\"a1\", \"a0\", \"a1\"", "\"a1\", \"zz\""))
              .find("unknown symbol name \"zz\"") != std::string::npos);
    CHECK(message_of(patched(kLocalDoc, "\"2/3\"", "\"7/3\"")).find("mu") != std::string::npos);
    CHECK(message_of(patched(kLocalDoc, "\"pattern\": [\"a1\", \"a0\", \"a1\"]",
                             "\"pattern\": []"))
              .find("pattern") != std::string::npos);
    CHECK(message_of(patched(kLocalDoc, "\"lambda_min\": 2", "\"lambda_min\": 0"))
              .find("lambda") != std::string::npos);
    CHECK(message_of(patched(kLocalDoc, "\"lambda_max\": 3", "\"lambda_max\": 1"))
              .find("lambda") != std::string::npos);
    CHECK(message_of(patched(kLocalDoc, "relative_count\", \"chars\": \"0\"",
                             "single_marker\", \"chars\": \"0\""))
              .find("unknown symbol kind") != std::string::npos);
    CHECK(message_of("{") != "(no error)");
    CHECK(message_of(patched(kGlobalDoc, "\"accumulator\": \"product\"",
                             "\"accumulator\": \"sum\""))
              .find("accumulator") != std::string::npos);
    CHECK(message_of(patched(kLocalDoc, "\"alphabet\": \"01\"", "\"alphabet\": \"010\""))
              .find("duplicate") != std::string::npos);
    CHECK(message_of(patched(kTableDoc, "\"1\": \"1\",", "\"12\": \"1\","))
              .find("single character") != std::string::npos);
}

TEST_CASE("global documents must not carry local-only fields") {
    const std::string with_mu =
        patched(kGlobalDoc, "\"accumulator\": \"product\"", "\"accumulator\": \"product\", \"mu\": \"1/2\"");
    CHECK_THROWS_AS(parse_pattern_file(with_mu), input_error);
}

TEST_CASE("missing files are input errors") {
    CHECK_THROWS_AS(load_pattern_file("/nonexistent/p.json"), input_error);
    CHECK_THROWS_AS(load_text_file("/nonexistent/t.txt", wx::binary()), input_error);
}
