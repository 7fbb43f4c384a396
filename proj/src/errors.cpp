#include "apolab/errors.hpp"

namespace apolab {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegreeExceeded: return "DegreeExceeded";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::RaggedInput: return "RaggedInput";
    case ErrorCode::TypeTooLarge: return "TypeTooLarge";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::MixedDegrees: return "MixedDegrees";
    case ErrorCode::MixedVariableCounts: return "MixedVariableCounts";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace apolab
