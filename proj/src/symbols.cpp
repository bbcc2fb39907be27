#include "fuzzyseg/symbols.hpp"

#include "fuzzyseg/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzyseg {

Alphabet Alphabet::of(std::string_view chars) {
    if (chars.empty()) throw input_error("alphabet must not be empty");
    Alphabet a;
    for (char c : chars) {
        auto& seen = a.member_[static_cast<unsigned char>(c)];
        if (seen) throw input_error(std::string("duplicate alphabet character '") + c + "'");
        seen = true;
        a.chars_.push_back(c);
    }
    return a;
}

void Alphabet::require(char c) const {
    if (!contains(c))
        throw input_error(std::string("character '") + c + "' is not in the alphabet \"" +
                          chars_ + "\"");
}

std::string_view to_string(SymbolKind kind) {
    switch (kind) {
    case SymbolKind::relative_count: return "relative_count";
    case SymbolKind::max_run: return "max_run";
    case SymbolKind::char_table: return "char_table";
    case SymbolKind::single_marker: return "single_marker";
    }
    return "?";
}

SymbolSpec SymbolSpec::relative_count(std::string name, Alphabet alphabet, std::string_view chars) {
    SymbolSpec s;
    s.name_ = std::move(name);
    s.kind_ = SymbolKind::relative_count;
    s.alphabet_ = std::move(alphabet);
    for (char c : chars) {
        s.alphabet_.require(c);
        s.char_set_[static_cast<unsigned char>(c)] = true;
    }
    return s;
}

SymbolSpec SymbolSpec::max_run(std::string name, Alphabet alphabet, std::string_view chars) {
    SymbolSpec s = relative_count(std::move(name), std::move(alphabet), chars);
    s.kind_ = SymbolKind::max_run;
    return s;
}

SymbolSpec SymbolSpec::char_table(std::string name, Alphabet alphabet, std::map<char, Degree> table) {
    SymbolSpec s;
    s.name_ = std::move(name);
    s.kind_ = SymbolKind::char_table;
    s.alphabet_ = std::move(alphabet);
    for (const auto& [c, d] : table) s.alphabet_.require(c);
    s.table_ = std::move(table);
    return s;
}

SymbolSpec SymbolSpec::single_marker(std::string name, Alphabet alphabet, char marker,
                                     int required_len) {
    if (required_len < 1) throw input_error("single_marker length must be positive");
    SymbolSpec s;
    s.name_ = std::move(name);
    s.kind_ = SymbolKind::single_marker;
    s.alphabet_ = std::move(alphabet);
    s.alphabet_.require(marker);
    s.char_set_[static_cast<unsigned char>(marker)] = true;
    s.marker_ = marker;
    s.required_len_ = required_len;
    return s;
}

Degree SymbolSpec::table_degree(char c) const {
    const auto it = table_.find(c);
    return it == table_.end() ? Degree::zero() : it->second;
}

bool SymbolSpec::operator==(const SymbolSpec& other) const {
    return name_ == other.name_ && kind_ == other.kind_ &&
           alphabet_.chars() == other.alphabet_.chars() && char_set_ == other.char_set_ &&
           table_ == other.table_ && marker_ == other.marker_ &&
           required_len_ == other.required_len_;
}

void Evaluator::note_char(char c) {
    spec_->alphabet().require(c);
    if (spec_->kind() == SymbolKind::char_table) {
        if (len_ >= 1)
            throw input_error("char_table symbol '" + spec_->name() +
                              "' is defined only for single characters");
        single_ = spec_->table_degree(c);
    }
    if (spec_->in_char_set(c)) ++count_;
    ++len_;
}

void Evaluator::extend_right(char c) {
    note_char(c);
    if (spec_->kind() == SymbolKind::max_run) {
        if (spec_->in_char_set(c)) {
            ++suffix_run_;
            best_run_ = std::max(best_run_, suffix_run_);
            if (prefix_run_ == len_ - 1) prefix_run_ = len_;
        } else {
            suffix_run_ = 0;
        }
    }
}

void Evaluator::extend_left(char c) {
    note_char(c);
    if (spec_->kind() == SymbolKind::max_run) {
        if (spec_->in_char_set(c)) {
            ++prefix_run_;
            best_run_ = std::max(best_run_, prefix_run_);
            if (suffix_run_ == len_ - 1) suffix_run_ = len_;
        } else {
            prefix_run_ = 0;
        }
    }
}

Degree Evaluator::degree() const {
    switch (spec_->kind()) {
    case SymbolKind::relative_count:
        return len_ == 0 ? Degree::zero() : Degree::from_ratio(count_, len_);
    case SymbolKind::max_run:
        return len_ == 0 ? Degree::zero() : Degree::from_ratio(best_run_, len_);
    case SymbolKind::char_table:
        if (len_ == 0)
            throw std::logic_error("char_table symbol '" + spec_->name() +
                                   "' queried on the empty string");
        return single_;
    case SymbolKind::single_marker:
        return (len_ == spec_->required_len() && count_ == 1) ? Degree::one() : Degree::zero();
    }
    throw std::logic_error("unknown symbol kind");
}

Degree degree_of(const SymbolSpec& spec, std::string_view x) {
    Evaluator ev(spec);
    for (char c : x) ev.extend_right(c);
    return ev.degree();
}

std::optional<int> look_ahead(std::string_view text, int i, const SymbolSpec& spec,
                              int lambda1, int lambda2, Degree mu) {
    const int n = static_cast<int>(text.size());
    if (i < 1 || i > n) throw input_error("look_ahead position " + std::to_string(i) +
                                          " out of range [1, " + std::to_string(n) + "]");
    if (lambda1 < 1 || lambda2 < lambda1)
        throw input_error("invalid segment length bounds");
    if (i + lambda1 - 1 > n) return std::nullopt;

    Evaluator ev(spec);
    for (int pos = i; pos < i + lambda1 - 1; ++pos) ev.extend_right(text[pos - 1]);
    const int last = std::min(i + lambda2 - 1, n);
    for (int j = i + lambda1 - 1; j <= last; ++j) {
        ev.extend_right(text[j - 1]);
        if (ev.degree() >= mu) return j;
    }
    return std::nullopt;
}

} // namespace fuzzyseg
