#include "fuzzyseg/pattern.hpp"

#include "fuzzyseg/errors.hpp"

namespace fuzzyseg {

void Pattern::validate() const {
    if (symbols.empty()) throw input_error("pattern must contain at least one symbol");
    if (lambda_min < 1 || lambda_max < lambda_min)
        throw input_error("segment length bounds must satisfy 1 <= lambda_min <= lambda_max, got [" +
                          std::to_string(lambda_min) + ", " + std::to_string(lambda_max) + "]");
    for (const auto& sym : symbols)
        if (sym.kind() == SymbolKind::char_table && lambda_max != 1)
            throw input_error("char_table symbol '" + sym.name() +
                              "' requires unit segment length (lambda_max == 1)");
}

void validate_text(std::string_view text, const Alphabet& alphabet) {
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!alphabet.contains(text[i]))
            throw input_error(std::string("text position ") + std::to_string(i + 1) +
                              ": character '" + text[i] + "' is not in the alphabet \"" +
                              alphabet.chars() + "\"");
}

std::string_view slice(std::string_view text, Segment seg) {
    return text.substr(static_cast<std::size_t>(seg.low) - 1,
                       static_cast<std::size_t>(seg.length()));
}

} // namespace fuzzyseg
