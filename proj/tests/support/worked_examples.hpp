#pragma once

// Builders for the worked examples shared by the unit and acceptance suites.

#include "fuzzyseg/global_seg.hpp"
#include "fuzzyseg/matching.hpp"
#include "fuzzyseg/pattern.hpp"

#include <map>
#include <string>

namespace wx {

using namespace fuzzyseg;

inline Alphabet binary() { return Alphabet::of("01"); }

// relative share of 0s / 1s
inline SymbolSpec a0() { return SymbolSpec::relative_count("a0", binary(), "0"); }
inline SymbolSpec a1() { return SymbolSpec::relative_count("a1", binary(), "1"); }
// longest run of 0s / 1s over the length
inline SymbolSpec a2() { return SymbolSpec::max_run("a2", binary(), "0"); }
inline SymbolSpec a3() { return SymbolSpec::max_run("a3", binary(), "1"); }

inline Degree two_thirds() { return Degree::from_ratio(2, 3); }

// T = 101100011, P = a1 a0 a1, lambda = (2,3), mu = 2/3
inline std::string count_enum_text() { return "101100011"; }
inline Pattern count_enum_pattern() {
    return Pattern{binary(), {a1(), a0(), a1()}, 2, 3, two_thirds()};
}

// P = a3 a1 a0 a2 a1 a3, x = <010,110,101,001,011,11>, mu = 2/3
inline Pattern border_demo_pattern() {
    return Pattern{binary(), {a3(), a1(), a0(), a2(), a1(), a3()}, 2, 3, two_thirds()};
}
inline std::vector<std::string> border_demo_components() {
    return {"010", "110", "101", "001", "011", "11"};
}

// T = 01011100101001110011, P = a0 a1 a2 a3, lambda = (2,3), mu = 2/3
inline std::string capture_trace_text() { return "01011100101001110011"; }
inline Pattern capture_trace_pattern() {
    return Pattern{binary(), {a0(), a1(), a2(), a3()}, 2, 3, two_thirds()};
}

// Sigma = {1..5}, S/M/L tables, P = SMSL, mu = 0.75, T = 13231425
inline Alphabet digits5() { return Alphabet::of("12345"); }

inline SymbolSpec table_symbol(const char* name, std::map<char, Degree> table) {
    return SymbolSpec::char_table(name, digits5(), std::move(table));
}
inline SymbolSpec sym_small() {
    return table_symbol("S", {{'1', Degree::one()},
                              {'2', Degree::from_ratio(3, 4)},
                              {'3', Degree::from_ratio(1, 2)},
                              {'4', Degree::from_ratio(1, 4)},
                              {'5', Degree::zero()}});
}
inline SymbolSpec sym_medium() {
    return table_symbol("M", {{'1', Degree::zero()},
                              {'2', Degree::from_ratio(3, 4)},
                              {'3', Degree::one()},
                              {'4', Degree::from_ratio(3, 4)},
                              {'5', Degree::zero()}});
}
inline SymbolSpec sym_large() {
    return table_symbol("L", {{'1', Degree::zero()},
                              {'2', Degree::from_ratio(1, 4)},
                              {'3', Degree::from_ratio(1, 2)},
                              {'4', Degree::from_ratio(3, 4)},
                              {'5', Degree::one()}});
}
inline std::string sml_text() { return "13231425"; }
inline FuzzyPattern sml_pattern() {
    return FuzzyPattern{digits5(), {sym_small(), sym_medium(), sym_small(), sym_large()},
                        Degree::from_ratio(3, 4)};
}

// T = 101110001101, P = a1 a0 a1, product
inline std::string product_decomp_text() { return "101110001101"; }
inline GlobalProblem product_decomp_problem(int lambda) {
    return GlobalProblem{binary(), {a1(), a0(), a1()}, lambda, AccumulatorKind::product};
}

} // namespace wx
