#include "tqft/error.hpp"

namespace tqft {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::invalid_diagram: return "InvalidDiagram";
    case ErrorCode::boundary_mismatch: return "BoundaryMismatch";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::has_crossings: return "HasCrossings";
    case ErrorCode::no_crossings: return "NoCrossings";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::open_boundary: return "OpenBoundary";
    case ErrorCode::diagram_too_large: return "DiagramTooLarge";
    case ErrorCode::degenerate_qubit: return "DegenerateQubit";
    case ErrorCode::not_separable: return "NotSeparable";
    case ErrorCode::not_applicable: return "NotApplicable";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::parse_error: return "ParseError";
    }
    return "Unknown";
}

} // namespace tqft
