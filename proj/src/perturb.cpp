#include "ttq/perturb.hpp"

#include <algorithm>
#include <cctype>

#include "ttq/errors.hpp"
#include "ttq/util.hpp"

namespace ttq {

const char* to_string(TaskKind task) {
    switch (task) {
        case TaskKind::OriginalTable: return "original_table";
        case TaskKind::WithoutTable: return "without_table";
        case TaskKind::AlteredEntity: return "altered_entity";
        case TaskKind::MissingRelevantRows: return "missing_relevant_rows";
        case TaskKind::InformationAbsenceDetection: return "information_absence_detection";
    }
    return "?";
}

std::optional<TaskKind> task_from_string(const std::string& name) {
    for (TaskKind task : all_tasks()) {
        if (equals_ci(name, to_string(task))) return task;
    }
    return std::nullopt;
}

const std::vector<TaskKind>& all_tasks() {
    static const std::vector<TaskKind> kAll = {
        TaskKind::OriginalTable,       TaskKind::WithoutTable,
        TaskKind::AlteredEntity,       TaskKind::MissingRelevantRows,
        TaskKind::InformationAbsenceDetection,
    };
    return kAll;
}

AliasPool AliasPool::load(const std::filesystem::path& path) {
    AliasPool pool;
    for (const std::string& raw : split_lines(read_file(path))) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        pool.names_.push_back(std::move(line));
    }
    if (pool.names_.empty())
        throw Error(ErrorKind::Format, path.string() + ": alias pool has no entries");
    return pool;
}

AliasPool AliasPool::from_names(std::vector<std::string> names) {
    AliasPool pool;
    pool.names_ = std::move(names);
    if (pool.names_.empty()) throw Error(ErrorKind::Format, "alias pool has no entries");
    return pool;
}

namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

bool boundary_before(const std::string& text, std::size_t pos) {
    return pos == 0 || !is_word_char(text[pos - 1]);
}

bool boundary_after(const std::string& text, std::size_t end) {
    return end >= text.size() || !is_word_char(text[end]);
}

bool matches_at(const std::string& text, std::size_t pos, const std::string& needle) {
    return pos + needle.size() <= text.size() &&
           starts_with_ci(std::string_view(text).substr(pos), needle);
}

std::string last_token(const std::string& name) {
    std::size_t end = name.find_last_not_of(' ');
    if (end == std::string::npos) return {};
    std::size_t begin = name.find_last_of(' ', end);
    return name.substr(begin == std::string::npos ? 0 : begin + 1, end - begin);
}

// Left-to-right scan over the renaming match rule: full-title spans first,
// then whole-word spans of the title's final token (>= 4 chars). The visitor
// receives (position, length, is_full_title) and must return the emitted
// replacement length so overlapping rescans are impossible.
template <typename Visitor>
void scan_title(const std::string& text, const std::string& title, Visitor&& visit) {
    std::string surname = last_token(title);
    bool use_surname = surname.size() >= 4 && !equals_ci(surname, title);
    std::size_t i = 0;
    while (i < text.size()) {
        if (boundary_before(text, i) && matches_at(text, i, title) &&
            boundary_after(text, i + title.size())) {
            visit(i, title.size(), true);
            i += title.size();
        } else if (use_surname && boundary_before(text, i) && matches_at(text, i, surname) &&
                   boundary_after(text, i + surname.size())) {
            visit(i, surname.size(), false);
            i += surname.size();
        } else {
            ++i;
        }
    }
}

}  // namespace

int count_title_occurrences(const std::string& text, const std::string& title) {
    int count = 0;
    scan_title(text, title, [&count](std::size_t, std::size_t, bool) { ++count; });
    return count;
}

std::string replace_title_occurrences(const std::string& text, const std::string& title,
                                      const std::string& alias) {
    std::string alias_surname = last_token(alias);
    std::string out;
    out.reserve(text.size());
    std::size_t copied = 0;
    scan_title(text, title, [&](std::size_t pos, std::size_t len, bool full) {
        out.append(text, copied, pos - copied);
        out.append(full ? alias : alias_surname);
        copied = pos + len;
    });
    out.append(text, copied, text.size() - copied);
    return out;
}

PerturbedInstance make_original(const InfoboxTable& table, const QAExample& example) {
    PerturbedInstance instance;
    instance.task = TaskKind::OriginalTable;
    instance.table = table;
    instance.question = example.question;
    instance.source_example_id = example.id;
    return instance;
}

PerturbedInstance remove_table(const InfoboxTable& table, const QAExample& example) {
    (void)table;
    PerturbedInstance instance;
    instance.task = TaskKind::WithoutTable;
    instance.question = example.question;
    instance.source_example_id = example.id;
    return instance;
}

PerturbedInstance make_absence_control(const InfoboxTable& table, const QAExample& example) {
    PerturbedInstance instance;
    instance.task = TaskKind::InformationAbsenceDetection;
    instance.table = table;
    instance.question = example.question;
    instance.source_example_id = example.id;
    return instance;
}

namespace {

std::string all_text(const InfoboxTable& table, const std::string& question) {
    std::string text = table.title;
    text.push_back('\n');
    for (const auto& section : table.sections) {
        if (section.header) {
            text += *section.header;
            text.push_back('\n');
        }
        for (const auto& row : section.rows) {
            text += row.key;
            for (const auto& v : row.values) {
                text.push_back('\t');
                text += v;
            }
            text.push_back('\n');
        }
    }
    text += question;
    return text;
}

}  // namespace

PerturbedInstance rename_entity(const InfoboxTable& table, const QAExample& example,
                                std::uint64_t seed, const AliasPool& pool) {
    const std::string& title = table.title;
    std::string corpus = all_text(table, example.question);
    std::string title_surname = last_token(title);

    const auto& names = pool.names();
    std::uint64_t base = fnv1a64(seed, title);
    std::string alias;
    for (std::size_t attempt = 0; attempt < names.size(); ++attempt) {
        const std::string& candidate = names[(base + attempt) % names.size()];
        if (equals_ci(candidate, title)) continue;
        if (contains_ci(corpus, candidate)) continue;
        if (contains_ci(candidate, title)) continue;
        if (title_surname.size() >= 4 && contains_ci(candidate, title_surname)) continue;
        alias = candidate;
        break;
    }
    if (alias.empty())
        throw Error(ErrorKind::AliasCollision,
                    "no usable alias for \"" + title + "\" after " +
                        std::to_string(names.size()) + " draws");

    auto rename = [&](const std::string& s) { return replace_title_occurrences(s, title, alias); };

    InfoboxTable renamed = table;
    renamed.title = rename(renamed.title);
    for (auto& section : renamed.sections) {
        if (section.header) section.header = rename(*section.header);
        for (auto& row : section.rows) {
            row.key = rename(row.key);
            for (auto& v : row.values) v = rename(v);
        }
    }

    PerturbedInstance instance;
    instance.task = TaskKind::AlteredEntity;
    instance.table = std::move(renamed);
    instance.question = rename(example.question);
    instance.alias = alias;
    instance.source_example_id = example.id;
    instance.seed = seed;

    if (count_title_occurrences(all_text(*instance.table, instance.question), title) != 0)
        throw Error(ErrorKind::Invariant,
                    "original title still occurs after renaming \"" + title + "\"");
    return instance;
}

PerturbedInstance delete_evidence_rows(const InfoboxTable& table, const QAExample& example) {
    if (example.evidence_keys.empty())
        throw Error(ErrorKind::NoEvidence, "example " + example.id + " has no evidence keys");

    auto matches_evidence = [&example](const Row& row) {
        std::string key = trim(row.key);
        for (const auto& ev : example.evidence_keys) {
            if (equals_ci(key, trim(ev))) return true;
        }
        return false;
    };

    std::vector<DeletedRow> deleted;
    for (std::size_t s = 0; s < table.sections.size(); ++s) {
        const auto& rows = table.sections[s].rows;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (matches_evidence(rows[r]))
                deleted.push_back({static_cast<int>(s), static_cast<int>(r), rows[r]});
        }
    }
    if (deleted.empty())
        throw Error(ErrorKind::Invariant,
                    "no row matches any evidence key of example " + example.id);
    if (deleted.size() == table.row_count())
        throw Error(ErrorKind::EmptiedTable,
                    "deleting evidence would remove every row of " + table.source_id);

    InfoboxTable reduced = table;
    for (auto& section : reduced.sections) {
        auto& rows = section.rows;
        rows.erase(std::remove_if(rows.begin(), rows.end(), matches_evidence), rows.end());
    }

    PerturbedInstance instance;
    instance.task = TaskKind::MissingRelevantRows;
    instance.table = std::move(reduced);
    instance.question = example.question;
    instance.deleted = std::move(deleted);
    instance.source_example_id = example.id;
    return instance;
}

InfoboxTable restore(const PerturbedInstance& instance) {
    if (!instance.table)
        throw Error(ErrorKind::BadCoordinates, "instance has no table to restore into");
    InfoboxTable table = *instance.table;
    std::vector<DeletedRow> deleted = instance.deleted;
    std::sort(deleted.begin(), deleted.end(), [](const DeletedRow& a, const DeletedRow& b) {
        return std::tie(a.section_index, a.row_index) < std::tie(b.section_index, b.row_index);
    });
    for (const auto& d : deleted) {
        if (d.section_index < 0 || d.section_index >= static_cast<int>(table.sections.size()))
            throw Error(ErrorKind::BadCoordinates,
                        "section " + std::to_string(d.section_index) + " out of range");
        auto& rows = table.sections[static_cast<std::size_t>(d.section_index)].rows;
        if (d.row_index < 0 || d.row_index > static_cast<int>(rows.size()))
            throw Error(ErrorKind::BadCoordinates,
                        "row " + std::to_string(d.row_index) + " out of range in section " +
                            std::to_string(d.section_index));
        rows.insert(rows.begin() + d.row_index, d.row);
    }
    return table;
}

}  // namespace ttq
