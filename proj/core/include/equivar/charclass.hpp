#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <equivar/rational_character.hpp>

namespace equivar {

/// h = exp(2 pi i angles) in a torus.
struct TorusElement {
    std::vector<Rational> angles;
};

enum class LocusType { isolated_point, circle };

enum class PipelineCase { elliptic_etm, contact, zero_operator, locally_free };

std::string_view locus_type_name(LocusType t) noexcept;
std::optional<LocusType> parse_locus_type(std::string_view text) noexcept;
std::string_view pipeline_case_name(PipelineCase c) noexcept;
std::optional<PipelineCase> parse_pipeline_case(std::string_view text) noexcept;

struct NormalWeight {
    Weight w;
    bool complex = true; // a real normal line pair contributes both w and -w
};

struct FixedLocusDatum {
    std::string id;
    LocusType type = LocusType::isolated_point;
    std::vector<Weight> tangent_weights;
    std::vector<NormalWeight> normal_weights;
    Weight twist;
    /// One entry per denominator factor (tangent, then normal), or a single
    /// entry applied to all of them.
    std::vector<Direction> directions;
    int orientation_sign = 1;
    /// Weight of the torus along a fixed circle.
    std::optional<Weight> circle_weight;
};

/// Truncated power series in one variable theta.
struct PowerSeries {
    std::vector<Rational> coeffs;

    Rational evaluate(const Rational &theta) const;
    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b);
    friend bool operator==(const PowerSeries &a, const PowerSeries &b);
    PowerSeries truncated(int order) const;
    PowerSeries reciprocal() const;
};

/// Localized Todd factor prod 1/(1 - t^{-w}); directions unset.
RationalCharacter td_factor(const std::vector<Weight> &weights, int rank);

/// D_h = prod (1 - c_w t^w) with c_w = h^w; only eigenvalues +-1 are supported.
RationalCharacter dh_factor(const TorusElement &h, const std::vector<Weight> &normal_weights, int rank);

/// prod over roots of sin(x/2)/(x/2), x = <root, direction> theta, up to theta^order.
PowerSeries j_h_function(const std::vector<Weight> &roots, const Weight &direction, int order);

/// prod over weights of (x/2)/sin(x/2), the localized A-hat squared factor.
PowerSeries ahat_squared_factor(const std::vector<Weight> &weights, const Weight &direction, int order);

/// sum over n in Z of t^{n w}, as [1/(1 - t^w)]_+ - [1/(1 - t^w)]_-.
RationalCharacter circle_lattice_sum(const Weight &w);

RationalCharacter fixed_point_contribution(const FixedLocusDatum &d, PipelineCase c);

/// Sum of the locus contributions; asserts integral coefficients up to policy.max_degree.
RationalCharacter localize_index(const std::vector<FixedLocusDatum> &data, PipelineCase c, const SeriesPolicy &policy);

} // namespace equivar
