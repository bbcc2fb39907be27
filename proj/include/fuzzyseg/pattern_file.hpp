#pragma once

#include "fuzzyseg/global_seg.hpp"
#include "fuzzyseg/pattern.hpp"

#include <filesystem>
#include <string>
#include <variant>

namespace fuzzyseg {

using ParsedProblem = std::variant<Pattern, GlobalProblem>;

/// Parses the JSON pattern document. Local problems carry "mu" (and optional
/// "lambda_min"/"lambda_max", both defaulting to 1); global problems carry
/// "accumulator" ("product" | "min") and "lambda_min" instead. Symbol kinds:
/// relative_count / max_run (field "chars") and char_table (field "table",
/// character -> degree string). Degree strings are "p/q", "0", "1", or exact
/// decimals like "0.75". Errors carry the offending field.
ParsedProblem parse_pattern_file(const std::string& bytes);

ParsedProblem load_pattern_file(const std::filesystem::path& path);

/// Reads a text file, strips one trailing newline, validates every character
/// against the alphabet.
std::string load_text_file(const std::filesystem::path& path, const Alphabet& alphabet);

} // namespace fuzzyseg
