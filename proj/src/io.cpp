#include "palinstar/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "palinstar/error.hpp"

namespace palinstar {

namespace {

std::string location(std::string_view text, std::size_t byte) {
    // nlohmann reports the 1-based byte at which parsing stopped.
    const std::size_t stop = std::min(byte > 0 ? byte - 1 : 0, text.size());
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < stop; ++i)
        if (text[i] == '\n') {
            ++line;
            line_start = i + 1;
        }
    const std::size_t line_end = std::min(text.find('\n', line_start), text.size());
    std::ostringstream out;
    out << "line " << line << ", column " << (stop - line_start + 1) << ": "
        << text.substr(line_start, line_end - line_start);
    return out.str();
}

char single_symbol(const nlohmann::json& v, const char* what) {
    if (!v.is_string() || v.get_ref<const std::string&>().size() != 1)
        throw ValidationError(std::string(what) + " entries must be single-character strings");
    return v.get_ref<const std::string&>()[0];
}

}  // namespace

StarlikeTree parse_tree(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed tree file at " + location(text, e.byte));
    }
    if (!doc.is_object()) throw ValidationError("tree file must contain a JSON object");
    for (const auto& item : doc.items())
        if (item.key() != "alphabet" && item.key() != "branches")
            throw ValidationError("unknown field '" + item.key() + "' in tree file");
    if (!doc.contains("branches") || !doc["branches"].is_array())
        throw ValidationError("tree file needs a 'branches' array");

    std::vector<std::string> branch_text;
    for (const auto& b : doc["branches"]) {
        if (!b.is_string()) throw ValidationError("branches must be strings");
        branch_text.push_back(b.get<std::string>());
    }

    std::vector<char> symbols;
    if (doc.contains("alphabet")) {
        if (!doc["alphabet"].is_array()) throw ValidationError("'alphabet' must be an array");
        for (const auto& s : doc["alphabet"]) symbols.push_back(single_symbol(s, "alphabet"));
    } else {
        std::set<char> seen;
        for (const auto& b : branch_text) seen.insert(b.begin(), b.end());
        symbols.assign(seen.begin(), seen.end());
        if (symbols.empty()) symbols.push_back('a');
    }

    try {
        Alphabet alphabet(std::move(symbols));
        std::vector<Word> branches;
        for (const auto& b : branch_text) branches.push_back(parse_word(b, alphabet));
        return StarlikeTree(std::move(alphabet), std::move(branches));
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception& e) {
        throw ValidationError(e.what());
    }
}

StarlikeTree load_tree(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open tree file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_tree(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

nlohmann::json tree_to_json(const StarlikeTree& t) {
    nlohmann::json alphabet = nlohmann::json::array();
    for (char c : t.alphabet().symbols()) alphabet.push_back(std::string(1, c));
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& b : t.branches()) branches.push_back(format_word(b, t.alphabet()));
    return {{"alphabet", std::move(alphabet)}, {"branches", std::move(branches)}};
}

std::string format_tree(const StarlikeTree& t) { return tree_to_json(t).dump(); }

nlohmann::json search_result_to_json(const SearchResult& r, bool include_timing) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(tree_to_json(w)["branches"]);
    nlohmann::json doc = {
        {"k", r.k},
        {"n", r.n},
        {"sigma", r.sigma},
        {"max", r.max_count},
        {"witnesses", std::move(witnesses)},
        {"witness_total", r.witness_total},
        {"classes", r.classes_examined},
        {"labelings", r.labelings_total},
    };
    if (include_timing) doc["elapsed_ms"] = r.elapsed.count();
    return doc;
}

}  // namespace palinstar
