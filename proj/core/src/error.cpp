#include <equivar/error.hpp>

namespace equivar {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
        case Errc::delta_clash: return "DeltaClash";
        case Errc::non_orientable: return "NonOrientable";
        case Errc::splitting_missing: return "SplittingMissing";
        case Errc::missing_fibre: return "MissingFibre";
        case Errc::rank_data_missing: return "RankDataMissing";
        case Errc::not_transverse: return "NotTransverse";
        case Errc::not_principal: return "NotPrincipal";
        case Errc::zero_weight: return "ZeroWeight";
        case Errc::not_normal: return "NotNormal";
        case Errc::non_integer_coefficients: return "NonIntegerCoefficients";
        case Errc::missing_expansion_direction: return "MissingExpansionDirection";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::parse_error: return "ParseError";
        case Errc::invariant_violation: return "InvariantViolation";
        case Errc::unknown_example: return "UnknownExample";
    }
    return "Unknown";
}

EngineError::EngineError(Errc code, const std::string &what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

void fail(Errc code, const std::string &what)
{
    throw EngineError(code, what);
}

} // namespace equivar
