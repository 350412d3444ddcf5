#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <equivar/formal_model.hpp>

namespace equivar {

enum class RenderFormat { text, latex };

std::optional<RenderFormat> parse_render_format(std::string_view text) noexcept;

std::string to_latex(const Element &e, const FormalModel &m);

/// J and its Taylor display for every frame of the model, one block per frame.
std::string render_j_forms(const FormalModel &m, RenderFormat format);

} // namespace equivar
