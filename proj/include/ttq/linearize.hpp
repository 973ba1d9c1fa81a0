#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ttq/dataset.hpp"

namespace ttq {

// Tab-separated rendering of a table: line 0 is "Title<TAB>title", sections
// are separated by one blank line, a section header (no tab) precedes its
// rows, multi-valued cells join with " | ". No trailing newline.
struct LinearTable {
    std::string text;
    // (section_index, row_index) -> 0-based line number of that row in text.
    std::map<std::pair<int, int>, int> line_index;

    std::vector<std::string> lines() const;
};

LinearTable linearize(const InfoboxTable& table);

// Inverse of linearize. Throws Error(Grammar) with a 1-based line number on
// malformed text, Error(Invariant) when the parsed table is structurally
// invalid (e.g. no content rows).
InfoboxTable parse_linear(const std::string& text, const std::string& source_id = "parsed");

// All line numbers whose row key equals `key` (case-insensitive, trimmed).
// The Title line counts as a row line; section headers never match.
std::vector<int> find_row_line(const LinearTable& linear, const std::string& key);

std::string join_values(const std::vector<std::string>& values);   // " | " join, escaping "|"
std::vector<std::string> split_values(const std::string& joined);  // inverse of join_values

}  // namespace ttq
