#pragma once

#include <stdexcept>
#include <string>

namespace vcfes {

enum class ErrorKind {
    IoFailure,
    MalformedFile,
    FormatMismatch,
    DimensionMismatch,
    EmptyForeground,
    BadTarget,
    DegenerateBatch,
    DegenerateDataset,
    MissingPrototypes,
    NonFiniteLoss,
    DuplicateImageId,
    EmptyIndex,
    EmptyGallery,
    NoRelevant,
    ConfigError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// Process exit codes shared by the CLI and scripts. Stable contract.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitNumerical = 3,
    kExitFormat = 4,
    kExitEmptyData = 5,
};

int exit_code_for(ErrorKind kind);

}  // namespace vcfes
