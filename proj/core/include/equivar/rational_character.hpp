#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <equivar/laurent.hpp>

namespace equivar {

enum class Direction { unset, positive, negative };

std::string_view direction_name(Direction d) noexcept;
std::optional<Direction> parse_direction(std::string_view text) noexcept;

/// 1/(1 - c t^w) with a choice of geometric-series side:
///   positive: sum_{n>=0} (c t^w)^n
///   negative: -sum_{n>=1} (c^{-1} t^{-w})^n
struct DenominatorFactor {
    Weight w;
    Rational c = 1;
    Direction direction = Direction::unset;
};

bool operator==(const DenominatorFactor &a, const DenominatorFactor &b);
bool operator<(const DenominatorFactor &a, const DenominatorFactor &b);

struct CharacterPiece {
    LaurentPolynomial numerator;
    std::vector<DenominatorFactor> denominator;
};

/// Finite sum of Laurent numerators over factored binomial denominators.
class RationalCharacter {
public:
    explicit RationalCharacter(int rank = 1) : rank_(rank) {}

    static RationalCharacter from_laurent(const LaurentPolynomial &p);
    static RationalCharacter fraction(const LaurentPolynomial &numerator, std::vector<DenominatorFactor> denominator);

    int rank() const noexcept { return rank_; }
    const std::vector<CharacterPiece> &pieces() const noexcept { return pieces_; }

    /// Orients every factor so its weight is lexicographically positive,
    /// cancels binomials that divide exactly and merges equal denominators.
    RationalCharacter canonical() const;

    /// The character as a Laurent polynomial when all denominators cancel.
    std::optional<LaurentPolynomial> as_laurent() const;

    RationalCharacter &operator+=(const RationalCharacter &o);
    friend RationalCharacter operator+(RationalCharacter a, const RationalCharacter &b) { return a += b; }
    friend RationalCharacter operator-(RationalCharacter a, const RationalCharacter &b);
    friend RationalCharacter operator*(const RationalCharacter &a, const RationalCharacter &b);
    friend RationalCharacter operator*(const Rational &s, const RationalCharacter &a);

    std::string to_string() const;

private:
    int rank_;
    std::vector<CharacterPiece> pieces_;
};

struct SeriesPolicy {
    int max_degree = 20;
    std::vector<std::string> variables;
};

/// Fourier coefficients of a torus distribution: either an explicit table on
/// the window |w|_1 <= max_degree, or the constant family on all of Z^l.
class DistributionalCharacter {
public:
    static DistributionalCharacter window(int rank, int max_degree, std::map<Weight, Integer> coefficients);
    static DistributionalCharacter lattice(int rank, Integer value);

    int rank() const noexcept { return rank_; }
    bool is_lattice() const noexcept { return lattice_; }
    int max_degree() const noexcept { return max_degree_; }
    /// Nonzero entries of an explicit window.
    const std::map<Weight, Integer> &coefficients() const noexcept { return coefficients_; }
    const Integer &lattice_value() const noexcept { return lattice_value_; }

private:
    int rank_ = 1;
    bool lattice_ = false;
    int max_degree_ = 0;
    std::map<Weight, Integer> coefficients_;
    Integer lattice_value_ = 0;
};

/// Throws missing_expansion_direction if a factor has no direction or the
/// directions of a piece admit no common pointed cone, and
/// non_integer_coefficients on a fractional coefficient.
DistributionalCharacter expand_to_degree(const RationalCharacter &r, const SeriesPolicy &policy);

/// Throws out_of_range outside an explicit window.
Integer multiplicity(const DistributionalCharacter &d, const Weight &w);

} // namespace equivar
