#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rgsslab {

enum class ErrorKind {
    InvalidArgument,
    BlowUp,
    StepLimit,
    DerivativeUnavailable,
    StencilOutOfDomain,
    ConstraintViolated,
    NoRootInBracket,
    QuadratureSingularity,
    TruncationWarning,
    StabilityViolation,
    DomainTooNarrow,
    NotInvertible,
    WindowTooWide,
    SeriesDivergence,
    ResidualBelowNoiseFloor,
    PreconditionFailed,
    SingularProfile,
    CharacteristicsCross,
    FoldEncountered,
    AccuracyWindowExceeded,
    ParseError,
};

std::string_view to_string(ErrorKind k) noexcept;

// printf-style %.*g; used for messages (6 digits) and reports (17 digits).
std::string format_g(double v, int digits = 6);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Thrown when a flow leaves the bounded region; `reached` is the group parameter
// (or model-specific argument) attained before aborting.
class BlowUpError : public Error {
public:
    BlowUpError(double reached, const std::string& what)
        : Error(ErrorKind::BlowUp, what), reached_(reached) {}
    double reached() const noexcept { return reached_; }

private:
    double reached_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace rgsslab
