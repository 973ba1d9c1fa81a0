#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttq/taxonomy_types.hpp"

namespace ttq {

// One key/value row of an entity infobox; multi-valued cells keep their parts.
struct Row {
    std::string key;
    std::vector<std::string> values;

    bool operator==(const Row&) const = default;
};

struct Section {
    std::optional<std::string> header;  // absent for the leading untitled block
    std::vector<Row> rows;

    bool operator==(const Section&) const = default;
};

struct InfoboxTable {
    std::string source_id;
    std::string title;
    std::vector<Section> sections;

    bool operator==(const InfoboxTable&) const = default;

    std::size_t row_count() const;
    // Case-insensitive row-key membership (trimmed), headers not considered.
    bool has_row_key(const std::string& key) const;
};

enum class Split { Head, Tail };

struct QAExample {
    std::string id;
    std::string table_id;
    std::string question;
    std::vector<std::string> gold_answers;
    std::vector<std::string> evidence_keys;
    Split split = Split::Head;
    std::optional<TaxonomyLabel> labels;

    bool operator==(const QAExample&) const = default;
};

enum class TramTask {
    Ordering,
    Frequency,
    Duration,
    TypicalTime,
    AmbiguityResolution,
    Arithmetic,
    Relation,
    TemporalNLI,
    Causality,
    Storytelling,
};

const char* to_string(TramTask task);
std::optional<TramTask> tram_task_from_string(const std::string& name);
// Alphabetical by canonical name; the order used for quota remainders and draws.
const std::vector<TramTask>& tram_tasks_alphabetical();
int tram_option_arity(TramTask task);

struct TramExample {
    TramTask task = TramTask::Ordering;
    std::string problem_type;
    std::string question;
    std::vector<std::string> options;
    int answer_index = 0;

    bool operator==(const TramExample&) const = default;
};

// Generic multiple-choice item; the load format for the single-task auxiliary
// sources (DATE, Temporal Sequences).
struct McExample {
    std::string question;
    std::vector<std::string> options;
    int answer_index = 0;

    bool operator==(const McExample&) const = default;
};

enum class AuxDatasetKind { DATE, TemporalSequences, TRAM };

// Index over loaded tables, keyed by source_id.
class TableIndex {
  public:
    explicit TableIndex(std::vector<InfoboxTable> tables);

    const InfoboxTable* find(const std::string& source_id) const;
    const std::vector<InfoboxTable>& tables() const { return tables_; }

  private:
    std::vector<InfoboxTable> tables_;
    std::map<std::string, std::size_t> by_id_;
};

void validate_table(const InfoboxTable& table);            // throws Error(Invariant)
void validate_example(const QAExample& example, const InfoboxTable& table);
void validate_tram(const TramExample& example);

std::vector<InfoboxTable> load_tables(const std::filesystem::path& path);
std::vector<InfoboxTable> parse_tables_json(const std::string& text, const std::string& origin);
std::string serialize_tables(const std::vector<InfoboxTable>& tables);

std::vector<QAExample> load_qa(const std::filesystem::path& path, const TableIndex& tables);
std::vector<TramExample> load_tram(const std::filesystem::path& path);
std::vector<McExample> load_mc(const std::filesystem::path& path);

}  // namespace ttq
