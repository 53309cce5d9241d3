#ifndef MANIPLEX_ERROR_HPP
#define MANIPLEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace maniplex {

enum class ErrorCode {
    BadShape,
    NotInvolution,
    CommutationFailure,
    Disconnected,
    OutOfRange,
    EmptyInterval,
    RankMismatch,
    EmptyList,
    NotASubgroup,
    NotAManiplex,
    ModePreconditionViolated,
    NotSggi,
    NotAdmissible,
    PreconditionViolated,
    NotTwoOrbit,
    NotPolytope,
    BadParameter,
    IImproper,
    SchemaError,
    IoError,
};

const char* error_code_name(ErrorCode code);

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by Premaniplex::validate. Carries the offending colors and flag
/// (-1 where not applicable).
class ValidationError : public Error {
public:
    ValidationError(ErrorCode code, const std::string& message, int color, int other_color, long flag)
        : Error(code, message), color_(color), other_color_(other_color), flag_(flag) {}

    int color() const noexcept { return color_; }
    int other_color() const noexcept { return other_color_; }
    long flag() const noexcept { return flag_; }

private:
    int color_;
    int other_color_;
    long flag_;
};

}  // namespace maniplex

#endif
