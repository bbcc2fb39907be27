#include "fuzzyseg/pattern_file.hpp"

#include "fuzzyseg/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace fuzzyseg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw input_error("pattern file: " + where + ": " + what);
}

const json& field(const json& obj, const char* name) {
    const auto it = obj.find(name);
    if (it == obj.end()) fail(name, "missing field");
    return *it;
}

std::string string_field(const json& obj, const char* name) {
    const json& v = field(obj, name);
    if (!v.is_string()) fail(name, "expected a string");
    return v.get<std::string>();
}

int int_field(const json& obj, const char* name) {
    const json& v = field(obj, name);
    if (!v.is_number_integer()) fail(name, "expected an integer");
    return v.get<int>();
}

Degree degree_field(const json& obj, const char* name) {
    const std::string text = string_field(obj, name);
    try {
        return Degree::parse(text);
    } catch (const input_error& e) {
        fail(name, e.what());
    }
}

char single_char(const std::string& s, const std::string& where) {
    if (s.size() != 1) fail(where, "expected a single character, got \"" + s + "\"");
    return s[0];
}

SymbolSpec parse_symbol(const std::string& name, const json& body, const Alphabet& alphabet) {
    const std::string where = "symbols." + name;
    if (!body.is_object()) fail(where, "expected an object");
    const std::string kind = string_field(body, "kind");
    try {
        if (kind == "relative_count" || kind == "max_run") {
            const json& chars = field(body, "chars");
            if (!chars.is_string()) fail(where + ".chars", "expected a string of characters");
            const std::string set = chars.get<std::string>();
            if (set.empty()) fail(where + ".chars", "must not be empty");
            return kind == "relative_count"
                       ? SymbolSpec::relative_count(name, alphabet, set)
                       : SymbolSpec::max_run(name, alphabet, set);
        }
        if (kind == "char_table") {
            const json& table = field(body, "table");
            if (!table.is_object()) fail(where + ".table", "expected an object");
            std::map<char, Degree> degrees;
            for (const auto& [key, value] : table.items()) {
                if (!value.is_string()) fail(where + ".table." + key, "expected a degree string");
                degrees[single_char(key, where + ".table")] = Degree::parse(value.get<std::string>());
            }
            return SymbolSpec::char_table(name, alphabet, std::move(degrees));
        }
    } catch (const input_error& e) {
        fail(where, e.what());
    }
    fail(where + ".kind", "unknown symbol kind \"" + kind + "\" "
         "(expected relative_count, max_run, or char_table)");
}

} // namespace

ParsedProblem parse_pattern_file(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("pattern file: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("pattern file: top level must be an object");

    const Alphabet alphabet = Alphabet::of(string_field(doc, "alphabet"));

    const json& symbols_obj = field(doc, "symbols");
    if (!symbols_obj.is_object()) fail("symbols", "expected an object");
    std::map<std::string, SymbolSpec> symbols;
    for (const auto& [name, body] : symbols_obj.items())
        symbols.emplace(name, parse_symbol(name, body, alphabet));

    const json& pattern_list = field(doc, "pattern");
    if (!pattern_list.is_array() || pattern_list.empty())
        fail("pattern", "expected a non-empty list of symbol names");
    std::vector<SymbolSpec> sequence;
    for (const auto& entry : pattern_list) {
        if (!entry.is_string()) fail("pattern", "entries must be symbol names");
        const std::string name = entry.get<std::string>();
        const auto it = symbols.find(name);
        if (it == symbols.end()) fail("pattern", "unknown symbol name \"" + name + "\"");
        sequence.push_back(it->second);
    }

    if (doc.contains("accumulator")) {
        for (const char* banned : {"mu", "lambda_max"})
            if (doc.contains(banned))
                fail(banned, "not allowed in a global (accumulator) problem");
        GlobalProblem problem;
        problem.alphabet = alphabet;
        problem.symbols = std::move(sequence);
        problem.lambda = doc.contains("lambda_min") ? int_field(doc, "lambda_min") : 1;
        const std::string acc = string_field(doc, "accumulator");
        if (acc == "product")
            problem.accumulator = AccumulatorKind::product;
        else if (acc == "min")
            problem.accumulator = AccumulatorKind::minimum;
        else
            fail("accumulator", "expected \"product\" or \"min\", got \"" + acc + "\"");
        problem.validate();
        return problem;
    }

    Pattern pattern;
    pattern.alphabet = alphabet;
    pattern.symbols = std::move(sequence);
    pattern.lambda_min = doc.contains("lambda_min") ? int_field(doc, "lambda_min") : 1;
    pattern.lambda_max = doc.contains("lambda_max") ? int_field(doc, "lambda_max") : pattern.lambda_min;
    pattern.mu = degree_field(doc, "mu");
    pattern.validate();
    return pattern;
}

ParsedProblem load_pattern_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open pattern file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern_file(buf.str());
}

std::string load_text_file(const std::filesystem::path& path, const Alphabet& alphabet) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open text file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    if (!text.empty() && text.back() == '\r') text.pop_back();
    validate_text(text, alphabet);
    return text;
}

} // namespace fuzzyseg
