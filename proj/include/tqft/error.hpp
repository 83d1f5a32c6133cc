#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tqft {

enum class ErrorCode {
    invalid_argument,
    invalid_diagram,
    boundary_mismatch,
    size_mismatch,
    has_crossings,
    no_crossings,
    index_out_of_range,
    open_boundary,
    diagram_too_large,
    degenerate_qubit,
    not_separable,
    not_applicable,
    zero_vector,
    parse_error,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tqft
