#pragma once

#include <string>
#include <string_view>

#include <equivar/superalg.hpp>

namespace equivar {

/// Parses the element-expression grammar used by model files:
///   expr   := [+|-] term {(+|-) term}
///   term   := factor {* factor}
///   factor := primary [^ uint]
///   primary:= rational | name | delta[F] [^(i1,..,ik)] | delta[F;f] [^(..)] | ( expr )
/// Throws EngineError(parse_error) with the column of the offending token.
Element parse_element(std::string_view text, const FormalModel &m);

/// Inverse of parse_element: parse_element(to_text(e)) == e.
std::string to_text(const Element &e, const FormalModel &m);
std::string to_text(const Monomial &mono, const FormalModel &m);

} // namespace equivar
