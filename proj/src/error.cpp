#include "infnet/error.hpp"

namespace infnet {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::unknown_chain: return "unknown-chain";
        case ErrorCode::unknown_event: return "unknown-event";
        case ErrorCode::duplicate_event: return "duplicate-event";
        case ErrorCode::cycle_would_form: return "cycle-would-form";
        case ErrorCode::duplicate_edge: return "duplicate-edge";
        case ErrorCode::degree_violation: return "degree-violation";
        case ErrorCode::not_finalized: return "not-finalized";
        case ErrorCode::missing_projection: return "missing-projection";
        case ErrorCode::not_between: return "not-between";
        case ErrorCode::uncoordinated: return "uncoordinated";
        case ErrorCode::invalid_argument: return "invalid-argument";
        case ErrorCode::cap_exceeded: return "cap-exceeded";
        case ErrorCode::light_like: return "light-like";
        case ErrorCode::negative_scalar: return "negative-scalar";
        case ErrorCode::zero_interval: return "zero-interval";
        case ErrorCode::inconsistent_word: return "inconsistent-word";
        case ErrorCode::parse_error: return "parse-error";
        case ErrorCode::io_error: return "io-error";
        case ErrorCode::validation_failed: return "validation-failed";
    }
    return "unknown";
}

}  // namespace infnet
