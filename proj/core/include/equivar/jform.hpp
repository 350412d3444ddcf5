#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <equivar/formal_model.hpp>
#include <equivar/genco.hpp>

namespace equivar {

struct TransversalityResult {
    bool transverse = false;
    /// First sample whose rank falls short of the frame rank.
    std::optional<RationalMatrix> witness;
    int witness_index = -1;
};

/// Rank k of X -> f_alpha(X) on every declared sample (and on the derived
/// constant moment matrix when present). Throws rank_data_missing if the
/// frame has positive rank and no moment data at all.
TransversalityResult check_transversality(const FormalModel &m, std::string_view frame);

struct JForm {
    Element value;
    int frame = 0;
};

/// alpha_k ... alpha_1 delta_0(u); the empty product 1 when k = 0.
JForm j_form(const FormalModel &m, std::string_view frame);

bool check_closed(const JForm &j, const FormalModel &m);

/// alpha_j * J = 0 for every slot of the frame.
bool check_absorption(const JForm &j, const FormalModel &m);

/// J computed in the frame beta = A alpha, rewritten in the alpha basis.
Element frame_changed_j_form(const FormalModel &m, std::string_view frame, const RationalMatrix &A,
                             OrientationMode mode = OrientationMode::preserving);

bool frame_change_compare(const FormalModel &m, std::string_view frame, const RationalMatrix &A,
                          OrientationMode mode = OrientationMode::preserving);

/// Integral over the Lie algebra of pi_* J(E,(X,Y)) p(X) dX on a principal
/// bundle model with abelian connection psi_j and curvature Psi_j. `p` is a
/// polynomial in the parameters. Haar volume is normalized to 1.
Element chern_weil_pair(const FormalModel &m, const Element &p);

} // namespace equivar
