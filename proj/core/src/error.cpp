#include "flexcat/error.hpp"

namespace flexcat {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptyVector: return "EmptyVector";
        case ErrorKind::NegativeEntry: return "NegativeEntry";
        case ErrorKind::BadNormalization: return "BadNormalization";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ZeroTail: return "ZeroTail";
        case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
        case ErrorKind::NotFeasible: return "NotFeasible";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::EmptyViolationSet: return "EmptyViolationSet";
        case ErrorKind::BadRange: return "BadRange";
        case ErrorKind::SamplingFailed: return "SamplingFailed";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace flexcat
