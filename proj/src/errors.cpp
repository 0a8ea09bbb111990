#include "rgsslab/errors.hpp"

#include <cstdio>

namespace rgsslab {

std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::BlowUp: return "BlowUp";
        case ErrorKind::StepLimit: return "StepLimit";
        case ErrorKind::DerivativeUnavailable: return "DerivativeUnavailable";
        case ErrorKind::StencilOutOfDomain: return "StencilOutOfDomain";
        case ErrorKind::ConstraintViolated: return "ConstraintViolated";
        case ErrorKind::NoRootInBracket: return "NoRootInBracket";
        case ErrorKind::QuadratureSingularity: return "QuadratureSingularity";
        case ErrorKind::TruncationWarning: return "TruncationWarning";
        case ErrorKind::StabilityViolation: return "StabilityViolation";
        case ErrorKind::DomainTooNarrow: return "DomainTooNarrow";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::WindowTooWide: return "WindowTooWide";
        case ErrorKind::SeriesDivergence: return "SeriesDivergence";
        case ErrorKind::ResidualBelowNoiseFloor: return "ResidualBelowNoiseFloor";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::SingularProfile: return "SingularProfile";
        case ErrorKind::CharacteristicsCross: return "CharacteristicsCross";
        case ErrorKind::FoldEncountered: return "FoldEncountered";
        case ErrorKind::AccuracyWindowExceeded: return "AccuracyWindowExceeded";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string format_g(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

}  // namespace rgsslab
