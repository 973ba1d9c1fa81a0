#pragma once

#include <stdexcept>
#include <string>

namespace ttq {

// Every failure the harness can raise, so callers (and tests) can match on
// the condition instead of parsing message text.
enum class ErrorKind {
    Io,
    Format,
    Invariant,
    DanglingReference,
    Grammar,
    AliasCollision,
    NoEvidence,
    EmptiedTable,
    BadCoordinates,
    VariantMismatch,
    MissingExemplars,
    DuplicateExemplar,
    AuthMissing,
    RateLimited,
    Provider,
    FixtureMissing,
    EmptyResponse,
    NoFinalAnswer,
    InsufficientExamples,
    UnknownExampleId,
    EmptyGroup,
    EmptyResults,
    Config,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace ttq
