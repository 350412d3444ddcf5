#pragma once

#include <string_view>

#include <equivar/formal_model.hpp>
#include <equivar/linalg.hpp>

namespace equivar {

enum class OrientationMode {
    preserving, // det(A) > 0 required, the calculus used by frame changes
    absolute,   // |det A|, the honest pullback of a delta under any invertible A
};

/// delta^(I)(A u) written in terms of delta^(J)(u), |J| = |I|.
Element delta_linear_substitute(const DeltaFactor &d, const RationalMatrix &A,
                                OrientationMode mode = OrientationMode::preserving);

/// Applies the substitution to the delta factor of every term.
Element delta_linear_substitute(const Element &e, const RationalMatrix &A,
                                OrientationMode mode = OrientationMode::preserving);

/// Display form: delta^(I)(u) -> sum_J delta^(I+J)(f) (d alpha)^J / J!.
/// The output uses moment-argument deltas and is not a valid input to D.
Element taylor_expand_delta(const Element &e, std::string_view frame, const FormalModel &m);

/// Adds xi_<F>_<j> (even, degree 0, d xi = dxi) and dxi_<F>_<j> (odd, degree 1).
FormalModel with_fibre(const FormalModel &base, std::string_view frame);

/// (2 pi i)^{-k} times the fibre integral of exp(i D lambda), lambda = -sum xi^j alpha_j.
Element fourier_fibre_integrate(const FormalModel &lambda_model, std::string_view frame);

/// Re-expresses an element over another model by generator, frame and parameter names.
Element transfer(const Element &e, const FormalModel &from, const FormalModel &to);

} // namespace equivar
