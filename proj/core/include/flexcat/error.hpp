#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flexcat {

enum class ErrorKind {
    EmptyVector,
    NegativeEntry,
    BadNormalization,
    IndexOutOfRange,
    DimensionMismatch,
    ZeroTail,
    PreconditionUnmet,
    NotFeasible,
    WrongDimension,
    EmptyViolationSet,
    BadRange,
    SamplingFailed,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace flexcat
