#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace infnet {

enum class ErrorCode {
    unknown_chain,
    unknown_event,
    duplicate_event,
    cycle_would_form,
    duplicate_edge,
    degree_violation,
    not_finalized,
    missing_projection,
    not_between,
    uncoordinated,
    invalid_argument,
    cap_exceeded,
    light_like,
    negative_scalar,
    zero_interval,
    inconsistent_word,
    parse_error,
    io_error,
    validation_failed,
};

// Kebab-case identifier used in CLI reports, e.g. "cycle-would-form".
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace infnet
