#pragma once

#include <optional>
#include <string>

namespace ttq {

enum class Verdict { Correct, ModelError, DataIssue };

enum class ModelErrorCategory { TabularDataIssue, TemporalCalculation, OtherModel };

enum class DataIssueCategory {
    ExternalKnowledge,
    WrongAnnotationOrMultipleAnswers,
    AmbiguousOrIncomplete,
    OtherData,
};

// Human error-analysis label for one example. Exactly one sub-category is set,
// matching the verdict; Correct carries none.
struct TaxonomyLabel {
    Verdict verdict = Verdict::Correct;
    std::optional<ModelErrorCategory> model_error;
    std::optional<DataIssueCategory> data_issue;
    std::string note;

    bool operator==(const TaxonomyLabel&) const = default;
};

}  // namespace ttq
