#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ttq/dataset.hpp"

namespace ttq {

enum class TaskKind {
    OriginalTable,
    WithoutTable,
    AlteredEntity,
    MissingRelevantRows,
    InformationAbsenceDetection,
};

const char* to_string(TaskKind task);
std::optional<TaskKind> task_from_string(const std::string& name);
const std::vector<TaskKind>& all_tasks();

struct DeletedRow {
    int section_index = 0;
    int row_index = 0;
    Row row;

    bool operator==(const DeletedRow&) const = default;
};

// One evaluation condition derived from a (table, example) pair, carrying full
// provenance of what changed so the transform can be reversed and audited.
struct PerturbedInstance {
    TaskKind task = TaskKind::OriginalTable;
    std::optional<InfoboxTable> table;  // absent for WithoutTable
    std::string question;
    std::optional<std::string> alias;   // AlteredEntity only
    std::vector<DeletedRow> deleted;    // row-deletion tasks only
    std::string source_example_id;
    std::uint64_t seed = 0;
};

// Pseudonym pool for entity renaming: one alias per line, '#' comments.
class AliasPool {
  public:
    static AliasPool load(const std::filesystem::path& path);
    static AliasPool from_names(std::vector<std::string> names);

    const std::vector<std::string>& names() const { return names_; }

  private:
    std::vector<std::string> names_;
};

PerturbedInstance make_original(const InfoboxTable& table, const QAExample& example);
PerturbedInstance remove_table(const InfoboxTable& table, const QAExample& example);
PerturbedInstance rename_entity(const InfoboxTable& table, const QAExample& example,
                                std::uint64_t seed, const AliasPool& pool);
PerturbedInstance delete_evidence_rows(const InfoboxTable& table, const QAExample& example);
// Absence-detection control condition: original table, no deletion, so an
// abstain-always responder cannot score 100%.
PerturbedInstance make_absence_control(const InfoboxTable& table, const QAExample& example);

// Reinserts deleted rows at their recorded coordinates. Identity for
// instances with nothing deleted; Error(BadCoordinates) when coordinates do
// not fit the instance's table.
InfoboxTable restore(const PerturbedInstance& instance);

// Occurrence count of `title` in `text` under the renaming match rule:
// case-insensitive whole-string matches of the full title, plus whole-word
// matches of the title's final token when that token has >= 4 characters.
int count_title_occurrences(const std::string& text, const std::string& title);
std::string replace_title_occurrences(const std::string& text, const std::string& title,
                                      const std::string& alias);

}  // namespace ttq
