#include "ttq/linearize.hpp"

#include "ttq/errors.hpp"
#include "ttq/util.hpp"

namespace ttq {

std::vector<std::string> LinearTable::lines() const { return split_lines(text); }

std::string join_values(const std::vector<std::string>& values) {
    std::vector<std::string> escaped;
    escaped.reserve(values.size());
    for (const auto& v : values) escaped.push_back(replace_all(v, "|", "\\|"));
    return join(escaped, " | ");
}

std::vector<std::string> split_values(const std::string& joined) {
    std::vector<std::string> out;
    std::string current;
    std::size_t i = 0;
    while (i < joined.size()) {
        if (joined[i] == '\\' && i + 1 < joined.size() && joined[i + 1] == '|') {
            current.push_back('|');
            i += 2;
        } else if (joined.compare(i, 3, " | ") == 0) {
            out.push_back(current);
            current.clear();
            i += 3;
        } else {
            current.push_back(joined[i]);
            ++i;
        }
    }
    out.push_back(current);
    return out;
}

LinearTable linearize(const InfoboxTable& table) {
    LinearTable linear;
    std::vector<std::string> lines;
    lines.push_back("Title\t" + table.title);

    for (std::size_t s = 0; s < table.sections.size(); ++s) {
        if (s > 0) lines.emplace_back();  // blank separator between sections
        const Section& section = table.sections[s];
        if (section.header) lines.push_back(*section.header);
        for (std::size_t r = 0; r < section.rows.size(); ++r) {
            const Row& row = section.rows[r];
            linear.line_index[{static_cast<int>(s), static_cast<int>(r)}] =
                static_cast<int>(lines.size());
            lines.push_back(row.key + "\t" + join_values(row.values));
        }
    }
    linear.text = join(lines, "\n");
    return linear;
}

InfoboxTable parse_linear(const std::string& text, const std::string& source_id) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw Error(ErrorKind::Grammar, "line 1: empty input");

    auto grammar_error = [](std::size_t line_no, const std::string& what) -> Error {
        return Error(ErrorKind::Grammar, "line " + std::to_string(line_no + 1) + ": " + what);
    };

    const std::string& first = lines[0];
    std::size_t tab = first.find('\t');
    if (tab == std::string::npos || first.substr(0, tab) != "Title")
        throw grammar_error(0, "expected \"Title<TAB>...\"");

    InfoboxTable table;
    table.source_id = source_id;
    table.title = trim(first.substr(tab + 1));

    Section current;
    bool in_section = false;
    bool at_block_start = true;

    auto flush = [&] {
        if (in_section) {
            table.sections.push_back(std::move(current));
            current = Section{};
            in_section = false;
        }
    };

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (trim(line).empty()) {
            flush();
            at_block_start = true;
            continue;
        }
        std::size_t t = line.find('\t');
        if (t == std::string::npos) {
            if (!at_block_start) throw grammar_error(i, "row line missing a tab");
            flush();
            current.header = trim(line);
            in_section = true;
            at_block_start = false;
            continue;
        }
        Row row;
        row.key = trim(line.substr(0, t));
        if (row.key.empty()) throw grammar_error(i, "empty row key");
        row.values = split_values(line.substr(t + 1));
        if (!in_section) {
            current = Section{};
            in_section = true;
        }
        current.rows.push_back(std::move(row));
        at_block_start = false;
    }
    flush();

    // Per-section header/rows pairing is relaxed here (deleted-row renderings
    // legitimately leave header-only sections); whole-table invariants hold.
    if (trim(table.title).empty())
        throw Error(ErrorKind::Invariant, "title non-empty (source_id=" + source_id + ")");
    if (table.row_count() == 0)
        throw Error(ErrorKind::Invariant, "at least one row (source_id=" + source_id + ")");
    return table;
}

std::vector<int> find_row_line(const LinearTable& linear, const std::string& key) {
    std::string want = trim(key);
    std::vector<int> hits;
    std::vector<std::string> lines = linear.lines();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::size_t tab = lines[i].find('\t');
        if (tab == std::string::npos) continue;  // blank or section header
        if (equals_ci(trim(lines[i].substr(0, tab)), want)) hits.push_back(static_cast<int>(i));
    }
    return hits;
}

}  // namespace ttq
