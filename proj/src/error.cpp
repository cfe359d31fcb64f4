#include "vcfes/error.hpp"

namespace vcfes {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IoFailure: return "IoFailure";
        case ErrorKind::MalformedFile: return "MalformedFile";
        case ErrorKind::FormatMismatch: return "FormatMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::EmptyForeground: return "EmptyForeground";
        case ErrorKind::BadTarget: return "BadTarget";
        case ErrorKind::DegenerateBatch: return "DegenerateBatch";
        case ErrorKind::DegenerateDataset: return "DegenerateDataset";
        case ErrorKind::MissingPrototypes: return "MissingPrototypes";
        case ErrorKind::NonFiniteLoss: return "NonFiniteLoss";
        case ErrorKind::DuplicateImageId: return "DuplicateImageId";
        case ErrorKind::EmptyIndex: return "EmptyIndex";
        case ErrorKind::EmptyGallery: return "EmptyGallery";
        case ErrorKind::NoRelevant: return "NoRelevant";
        case ErrorKind::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonFiniteLoss:
            return kExitNumerical;
        case ErrorKind::MalformedFile:
        case ErrorKind::FormatMismatch:
        case ErrorKind::DimensionMismatch:
            return kExitFormat;
        case ErrorKind::EmptyForeground:
        case ErrorKind::DegenerateBatch:
        case ErrorKind::DegenerateDataset:
        case ErrorKind::EmptyIndex:
        case ErrorKind::EmptyGallery:
        case ErrorKind::NoRelevant:
            return kExitEmptyData;
        default:
            return kExitUsage;
    }
}

}  // namespace vcfes
