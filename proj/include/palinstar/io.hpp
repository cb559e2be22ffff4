#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "palinstar/search.hpp"
#include "palinstar/startree.hpp"

namespace palinstar {

// Parses {"alphabet": ["a", "b"], "branches": ["aaaa", "baaa", "bbaa"]}.
// When `alphabet` is absent it is the sorted set of symbols in the branches.
// Throws ParseError (with line:column) on malformed JSON, ValidationError on
// a well-formed document that does not describe a starlike tree.
StarlikeTree parse_tree(std::string_view text);
StarlikeTree load_tree(const std::string& path);

nlohmann::json tree_to_json(const StarlikeTree& t);
std::string format_tree(const StarlikeTree& t);

// {"k", "n", "sigma", "max", "witnesses", "witness_total", "classes",
//  "labelings", "elapsed_ms"}. Timing is omitted when include_timing is false,
// leaving a document that depends only on the search inputs.
nlohmann::json search_result_to_json(const SearchResult& r, bool include_timing = true);

}  // namespace palinstar
