#pragma once

#include <string_view>

// Normalization constants every computation in the engine agrees on. Tests
// assert against these, and every report embeds them.
namespace equivar::conventions {

inline constexpr std::string_view two_pi_policy =
    "J = (2*pi*i)^(-k) * q_*(exp(i*D(lambda))); Haar volume of H is 1";
inline constexpr std::string_view fourier_sign = "delta_0(x) = (2*pi)^(-k) * int exp(-i*<xi,x>) dxi";
inline constexpr std::string_view orientation_rule =
    "J = alpha_k...alpha_1 * delta_0(u); the frame orders M and the fibre as dxi_1...dxi_k";
inline constexpr std::string_view todd_factor = "1/(1 - t^(-w)) per tangent weight w";
inline constexpr std::string_view normal_factor = "1/(1 - c*t^w) per normal weight w, c = h^w";

} // namespace equivar::conventions
