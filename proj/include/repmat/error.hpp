#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace repmat {

enum class ErrorCode {
    invalid_weight,
    rank_mismatch,
    rank_constraint,
    empty_input,
    state_cap_exceeded,
    k_cap_exceeded,
    invalid_argument,
    not_hermitian,
    no_convergence,
};

/// Stable machine-readable name, used by the CLI in error reports.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace repmat
