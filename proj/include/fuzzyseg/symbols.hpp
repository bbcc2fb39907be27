#pragma once

#include "fuzzyseg/degree.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace fuzzyseg {

/// The declared character set. Text characters outside it are a hard input
/// error everywhere, never a silent degree 0.
class Alphabet {
public:
    Alphabet() = default;
    static Alphabet of(std::string_view chars);

    bool contains(char c) const { return member_[static_cast<unsigned char>(c)]; }
    const std::string& chars() const { return chars_; }
    void require(char c) const; // throws input_error when absent

private:
    std::string chars_;
    std::array<bool, 256> member_{};
};

enum class SymbolKind {
    relative_count, // share of positions holding a char from the set
    max_run,        // longest run of chars from the set, over the length
    char_table,     // unit-length symbol: per-character degree table
    single_marker,  // 1 iff |x| == required length and the marker occurs exactly once
};

std::string_view to_string(SymbolKind kind);

/// A fuzzy segmentation symbol: assigns a membership degree to strings over
/// the alphabet. All four kinds admit O(1) incremental evaluation (see
/// Evaluator). single_marker exists for the adversarial generator and tests
/// and is not accepted in pattern files.
class SymbolSpec {
public:
    static SymbolSpec relative_count(std::string name, Alphabet alphabet, std::string_view chars);
    static SymbolSpec max_run(std::string name, Alphabet alphabet, std::string_view chars);
    static SymbolSpec char_table(std::string name, Alphabet alphabet, std::map<char, Degree> table);
    static SymbolSpec single_marker(std::string name, Alphabet alphabet, char marker, int required_len);

    const std::string& name() const { return name_; }
    SymbolKind kind() const { return kind_; }
    const Alphabet& alphabet() const { return alphabet_; }
    bool in_char_set(char c) const { return char_set_[static_cast<unsigned char>(c)]; }
    Degree table_degree(char c) const; // char_table only; 0 for absent chars
    char marker() const { return marker_; }
    int required_len() const { return required_len_; }

    bool operator==(const SymbolSpec& other) const;

private:
    SymbolSpec() = default;

    std::string name_;
    SymbolKind kind_ = SymbolKind::relative_count;
    Alphabet alphabet_;
    std::array<bool, 256> char_set_{};      // relative_count / max_run / single_marker
    std::map<char, Degree> table_;          // char_table
    char marker_ = '\0';
    int required_len_ = 0;                  // single_marker
};

/// Incremental degree evaluation over a string that grows one character at a
/// time on either side. The regularity contract: after any interleaving of
/// left/right extensions producing x, degree() == degree_of(spec, x).
class Evaluator {
public:
    // Holds a reference: the spec must outlive the evaluator.
    explicit Evaluator(const SymbolSpec& spec) : spec_(&spec) {}
    explicit Evaluator(SymbolSpec&&) = delete;

    void extend_right(char c);
    void extend_left(char c);

    int length() const { return len_; }
    Degree degree() const;

    const SymbolSpec& spec() const { return *spec_; }

private:
    void note_char(char c); // shared count/length bookkeeping

    const SymbolSpec* spec_;
    int len_ = 0;
    std::int64_t count_ = 0;                    // relative_count / single_marker
    int best_run_ = 0, prefix_run_ = 0, suffix_run_ = 0; // max_run
    Degree single_;                              // char_table
};

/// Degree of the whole string, O(|x|). char_table requires |x| == 1.
Degree degree_of(const SymbolSpec& spec, std::string_view x);

/// Rightmost position of the shortest segment starting at i (1-indexed) whose
/// degree reaches mu, scanning j in [i+lambda1-1, min(i+lambda2-1, n)].
/// Empty result means no segment in the window qualifies.
std::optional<int> look_ahead(std::string_view text, int i, const SymbolSpec& spec,
                              int lambda1, int lambda2, Degree mu);

/// Text cursor advance: i+1 after a failed look-ahead, j+1 after a hit.
inline int increment(int i, std::optional<int> j) { return j ? *j + 1 : i + 1; }

} // namespace fuzzyseg
