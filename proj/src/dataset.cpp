#include "ttq/dataset.hpp"

#include <json.hpp>

#include <algorithm>

#include "ttq/errors.hpp"
#include "ttq/util.hpp"

namespace ttq {

using nlohmann::json;

std::size_t InfoboxTable::row_count() const {
    std::size_t n = 0;
    for (const auto& s : sections) n += s.rows.size();
    return n;
}

bool InfoboxTable::has_row_key(const std::string& key) const {
    std::string want = trim(key);
    for (const auto& s : sections) {
        for (const auto& r : s.rows) {
            if (equals_ci(trim(r.key), want)) return true;
        }
    }
    return false;
}

const char* to_string(TramTask task) {
    switch (task) {
        case TramTask::Ordering: return "Ordering";
        case TramTask::Frequency: return "Frequency";
        case TramTask::Duration: return "Duration";
        case TramTask::TypicalTime: return "TypicalTime";
        case TramTask::AmbiguityResolution: return "AmbiguityResolution";
        case TramTask::Arithmetic: return "Arithmetic";
        case TramTask::Relation: return "Relation";
        case TramTask::TemporalNLI: return "TemporalNLI";
        case TramTask::Causality: return "Causality";
        case TramTask::Storytelling: return "Storytelling";
    }
    return "?";
}

std::optional<TramTask> tram_task_from_string(const std::string& name) {
    static const std::pair<const char*, TramTask> kNames[] = {
        {"Ordering", TramTask::Ordering},
        {"Frequency", TramTask::Frequency},
        {"Duration", TramTask::Duration},
        {"TypicalTime", TramTask::TypicalTime},
        {"AmbiguityResolution", TramTask::AmbiguityResolution},
        {"Arithmetic", TramTask::Arithmetic},
        {"Relation", TramTask::Relation},
        {"TemporalNLI", TramTask::TemporalNLI},
        {"Causality", TramTask::Causality},
        {"Storytelling", TramTask::Storytelling},
    };
    for (const auto& [text, task] : kNames) {
        if (equals_ci(name, text)) return task;
    }
    return std::nullopt;
}

const std::vector<TramTask>& tram_tasks_alphabetical() {
    static const std::vector<TramTask> kOrder = [] {
        std::vector<TramTask> tasks = {
            TramTask::Ordering,     TramTask::Frequency,  TramTask::Duration,
            TramTask::TypicalTime,  TramTask::AmbiguityResolution,
            TramTask::Arithmetic,   TramTask::Relation,   TramTask::TemporalNLI,
            TramTask::Causality,    TramTask::Storytelling,
        };
        std::sort(tasks.begin(), tasks.end(), [](TramTask a, TramTask b) {
            return std::string(to_string(a)) < std::string(to_string(b));
        });
        return tasks;
    }();
    return kOrder;
}

int tram_option_arity(TramTask task) {
    switch (task) {
        case TramTask::Arithmetic: return 4;
        case TramTask::Causality:
        case TramTask::Storytelling: return 2;
        default: return 3;
    }
}

TableIndex::TableIndex(std::vector<InfoboxTable> tables) : tables_(std::move(tables)) {
    for (std::size_t i = 0; i < tables_.size(); ++i) by_id_[tables_[i].source_id] = i;
}

const InfoboxTable* TableIndex::find(const std::string& source_id) const {
    auto it = by_id_.find(source_id);
    return it == by_id_.end() ? nullptr : &tables_[it->second];
}

void validate_table(const InfoboxTable& table) {
    auto fail = [&table](const std::string& what) {
        throw Error(ErrorKind::Invariant, what + " (source_id=" + table.source_id + ")");
    };
    if (trim(table.title).empty()) fail("title non-empty");
    if (table.row_count() == 0) fail("at least one row");
    for (const auto& section : table.sections) {
        if (section.header && section.rows.empty()) fail("rows non-empty when header present");
        for (const auto& row : section.rows) {
            if (trim(row.key).empty()) fail("row key non-empty");
            if (row.values.empty()) fail("row values non-empty");
            for (const auto& v : row.values) {
                if (v.find('\t') != std::string::npos || v.find('\n') != std::string::npos)
                    fail("value free of tabs and newlines");
            }
        }
    }
}

void validate_example(const QAExample& example, const InfoboxTable& table) {
    if (example.gold_answers.empty())
        throw Error(ErrorKind::Invariant, "gold_answers non-empty (id=" + example.id + ")");
    for (const auto& gold : example.gold_answers) {
        if (trim(gold).empty())
            throw Error(ErrorKind::Invariant,
                        "gold answers non-empty after trimming (id=" + example.id + ")");
    }
    for (const auto& key : example.evidence_keys) {
        if (!table.has_row_key(key))
            throw Error(ErrorKind::Invariant, "evidence key not found: \"" + key +
                                                  "\" (id=" + example.id +
                                                  ", table=" + table.source_id + ")");
    }
}

void validate_tram(const TramExample& example) {
    int arity = tram_option_arity(example.task);
    if (static_cast<int>(example.options.size()) != arity)
        throw Error(ErrorKind::Invariant,
                    std::string(to_string(example.task)) + " expects " + std::to_string(arity) +
                        " options, got " + std::to_string(example.options.size()));
    if (example.answer_index < 0 ||
        example.answer_index >= static_cast<int>(example.options.size()))
        throw Error(ErrorKind::Invariant,
                    "answer_index " + std::to_string(example.answer_index) + " out of range");
}

namespace {

json parse_json_or_throw(const std::string& text, const std::string& origin) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorKind::Format, origin + ": malformed JSON");
    return doc;
}

std::string require_string(const json& obj, const char* field, const std::string& locus) {
    if (!obj.contains(field) || !obj[field].is_string())
        throw Error(ErrorKind::Format, locus + ": missing string field \"" + field + "\"");
    return obj[field].get<std::string>();
}

// Source cells sometimes arrive as stringified lists: "['a | b']". Unwrap the
// wrapper and split on the literal " | " delimiter.
std::vector<std::string> normalize_cell(std::string value) {
    std::string v = trim(value);
    if (v.size() >= 4 && v.substr(0, 2) == "['" && v.substr(v.size() - 2) == "']")
        v = v.substr(2, v.size() - 4);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = v.find(" | ", start);
        if (pos == std::string::npos) {
            parts.push_back(trim(v.substr(start)));
            break;
        }
        parts.push_back(trim(v.substr(start, pos - start)));
        start = pos + 3;
    }
    std::vector<std::string> out;
    for (auto& p : parts) {
        std::string cleaned = replace_all(replace_all(std::move(p), "\t", "\\t"), "\n", "\\n");
        if (!cleaned.empty()) out.push_back(std::move(cleaned));
    }
    return out;
}

}  // namespace

std::vector<InfoboxTable> parse_tables_json(const std::string& text, const std::string& origin) {
    json doc = parse_json_or_throw(text, origin);
    if (!doc.is_array()) throw Error(ErrorKind::Format, origin + ": expected a JSON array");

    std::vector<InfoboxTable> tables;
    tables.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& rec = doc[i];
        std::string locus = origin + " record " + std::to_string(i);
        if (!rec.is_object()) throw Error(ErrorKind::Format, locus + ": expected an object");

        InfoboxTable table;
        table.source_id = require_string(rec, "source_id", locus);
        table.title = trim(require_string(rec, "title", locus));
        if (!rec.contains("sections") || !rec["sections"].is_array())
            throw Error(ErrorKind::Format, locus + ": missing array field \"sections\"");
        for (const json& sec : rec["sections"]) {
            Section section;
            if (sec.contains("header") && !sec["header"].is_null())
                section.header = trim(sec["header"].get<std::string>());
            if (!sec.contains("rows") || !sec["rows"].is_array())
                throw Error(ErrorKind::Format, locus + ": section missing \"rows\"");
            for (const json& r : sec["rows"]) {
                Row row;
                row.key = trim(require_string(r, "key", locus));
                if (!r.contains("values") || !r["values"].is_array())
                    throw Error(ErrorKind::Format, locus + ": row missing \"values\"");
                for (const json& v : r["values"]) {
                    if (!v.is_string())
                        throw Error(ErrorKind::Format, locus + ": row values must be strings");
                    for (auto& part : normalize_cell(v.get<std::string>()))
                        row.values.push_back(std::move(part));
                }
                section.rows.push_back(std::move(row));
            }
            table.sections.push_back(std::move(section));
        }
        validate_table(table);
        tables.push_back(std::move(table));
    }
    return tables;
}

std::vector<InfoboxTable> load_tables(const std::filesystem::path& path) {
    return parse_tables_json(read_file(path), path.string());
}

std::string serialize_tables(const std::vector<InfoboxTable>& tables) {
    json doc = json::array();
    for (const auto& table : tables) {
        json sections = json::array();
        for (const auto& section : table.sections) {
            json rows = json::array();
            for (const auto& row : section.rows)
                rows.push_back({{"key", row.key}, {"values", row.values}});
            json sec;
            sec["header"] = section.header ? json(*section.header) : json(nullptr);
            sec["rows"] = std::move(rows);
            sections.push_back(std::move(sec));
        }
        doc.push_back({{"source_id", table.source_id},
                       {"title", table.title},
                       {"sections", std::move(sections)}});
    }
    return doc.dump(2) + "\n";
}

std::vector<QAExample> load_qa(const std::filesystem::path& path, const TableIndex& tables) {
    json doc = parse_json_or_throw(read_file(path), path.string());
    if (!doc.is_array()) throw Error(ErrorKind::Format, path.string() + ": expected a JSON array");

    std::vector<QAExample> examples;
    examples.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& rec = doc[i];
        std::string locus = path.string() + " record " + std::to_string(i);
        QAExample ex;
        ex.id = require_string(rec, "id", locus);
        ex.table_id = require_string(rec, "table_id", locus);
        ex.question = trim(require_string(rec, "question", locus));
        if (!rec.contains("gold_answers") || !rec["gold_answers"].is_array())
            throw Error(ErrorKind::Format, locus + ": missing array field \"gold_answers\"");
        for (const json& g : rec["gold_answers"]) ex.gold_answers.push_back(trim(g.get<std::string>()));
        if (rec.contains("evidence_keys")) {
            for (const json& k : rec["evidence_keys"])
                ex.evidence_keys.push_back(trim(k.get<std::string>()));
        }
        std::string split = require_string(rec, "split", locus);
        if (equals_ci(split, "head")) {
            ex.split = Split::Head;
        } else if (equals_ci(split, "tail")) {
            ex.split = Split::Tail;
        } else {
            throw Error(ErrorKind::Format, locus + ": split must be \"head\" or \"tail\"");
        }

        const InfoboxTable* table = tables.find(ex.table_id);
        if (!table) throw Error(ErrorKind::DanglingReference, locus + ": table_id \"" + ex.table_id + "\"");
        validate_example(ex, *table);
        examples.push_back(std::move(ex));
    }
    return examples;
}

std::vector<TramExample> load_tram(const std::filesystem::path& path) {
    json doc = parse_json_or_throw(read_file(path), path.string());
    if (!doc.is_array()) throw Error(ErrorKind::Format, path.string() + ": expected a JSON array");

    std::vector<TramExample> examples;
    examples.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& rec = doc[i];
        std::string locus = path.string() + " record " + std::to_string(i);
        TramExample ex;
        std::string task = require_string(rec, "task", locus);
        auto parsed = tram_task_from_string(task);
        if (!parsed) throw Error(ErrorKind::Format, locus + ": unknown TRAM task \"" + task + "\"");
        ex.task = *parsed;
        ex.problem_type = rec.value("problem_type", "");
        ex.question = require_string(rec, "question", locus);
        if (!rec.contains("options") || !rec["options"].is_array())
            throw Error(ErrorKind::Format, locus + ": missing array field \"options\"");
        for (const json& o : rec["options"]) ex.options.push_back(o.get<std::string>());
        if (!rec.contains("answer_index") || !rec["answer_index"].is_number_integer())
            throw Error(ErrorKind::Format, locus + ": missing integer field \"answer_index\"");
        ex.answer_index = rec["answer_index"].get<int>();
        validate_tram(ex);
        examples.push_back(std::move(ex));
    }
    return examples;
}

std::vector<McExample> load_mc(const std::filesystem::path& path) {
    json doc = parse_json_or_throw(read_file(path), path.string());
    if (!doc.is_array()) throw Error(ErrorKind::Format, path.string() + ": expected a JSON array");

    std::vector<McExample> examples;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& rec = doc[i];
        std::string locus = path.string() + " record " + std::to_string(i);
        McExample ex;
        ex.question = require_string(rec, "question", locus);
        if (!rec.contains("options") || !rec["options"].is_array())
            throw Error(ErrorKind::Format, locus + ": missing array field \"options\"");
        for (const json& o : rec["options"]) ex.options.push_back(o.get<std::string>());
        if (ex.options.size() < 2 || ex.options.size() > 4)
            throw Error(ErrorKind::Invariant, locus + ": options length must be 2..4");
        ex.answer_index = rec.value("answer_index", -1);
        if (ex.answer_index < 0 || ex.answer_index >= static_cast<int>(ex.options.size()))
            throw Error(ErrorKind::Invariant, locus + ": answer_index out of range");
        examples.push_back(std::move(ex));
    }
    return examples;
}

}  // namespace ttq
