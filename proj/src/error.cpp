#include "fracdiff/error.hpp"

namespace fracdiff {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Accuracy: return "accuracy";
    case ErrorCode::Argument: return "argument";
    case ErrorCode::Ellipticity: return "ellipticity";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::Blowup: return "blowup";
    case ErrorCode::DegenerateCurve: return "degenerate_curve";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Io: return "io";
    }
    return "unknown";
}

} // namespace fracdiff
