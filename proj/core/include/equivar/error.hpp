#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equivar {

/// Failure categories raised by the engine. Every public operation reports
/// errors by throwing EngineError with one of these codes.
enum class Errc {
    delta_clash,
    non_orientable,
    splitting_missing,
    missing_fibre,
    rank_data_missing,
    not_transverse,
    not_principal,
    zero_weight,
    not_normal,
    non_integer_coefficients,
    missing_expansion_direction,
    out_of_range,
    parse_error,
    invariant_violation,
    unknown_example,
};

std::string_view errc_name(Errc code) noexcept;

class EngineError : public std::runtime_error {
public:
    EngineError(Errc code, const std::string &what);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string &what);

} // namespace equivar
