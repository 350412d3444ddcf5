#include <equivar/charclass.hpp>
#include <equivar/error.hpp>

namespace equivar {

std::string_view locus_type_name(LocusType t) noexcept
{
    return t == LocusType::circle ? "circle" : "isolatedPoint";
}

std::optional<LocusType> parse_locus_type(std::string_view text) noexcept
{
    if (text == "circle") {
        return LocusType::circle;
    }
    if (text == "isolatedPoint") {
        return LocusType::isolated_point;
    }
    return std::nullopt;
}

std::string_view pipeline_case_name(PipelineCase c) noexcept
{
    switch (c) {
        case PipelineCase::elliptic_etm: return "ellipticETM";
        case PipelineCase::contact: return "contact";
        case PipelineCase::zero_operator: return "zeroOperator";
        case PipelineCase::locally_free: return "locallyFree";
    }
    return "ellipticETM";
}

std::optional<PipelineCase> parse_pipeline_case(std::string_view text) noexcept
{
    for (auto c : {PipelineCase::elliptic_etm, PipelineCase::contact, PipelineCase::zero_operator, PipelineCase::locally_free}) {
        if (pipeline_case_name(c) == text) {
            return c;
        }
    }
    return std::nullopt;
}

Rational PowerSeries::evaluate(const Rational &theta) const
{
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * theta + *it;
    }
    return acc;
}

PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
{
    const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    PowerSeries p{std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) {
            p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return p;
}

bool operator==(const PowerSeries &a, const PowerSeries &b)
{
    return a.coeffs == b.coeffs;
}

PowerSeries PowerSeries::truncated(int order) const
{
    PowerSeries p = *this;
    p.coeffs.resize(static_cast<std::size_t>(order + 1));
    return p;
}

PowerSeries PowerSeries::reciprocal() const
{
    if (coeffs.empty() || coeffs[0] == 0) {
        fail(Errc::invariant_violation, "power series without constant term has no reciprocal");
    }
    PowerSeries r{std::vector<Rational>(coeffs.size())};
    r.coeffs[0] = 1 / coeffs[0];
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
        Rational s = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            s += coeffs[k] * r.coeffs[n - k];
        }
        r.coeffs[n] = -s / coeffs[0];
    }
    return r;
}

namespace {

void check_rank(const Weight &w, int rank)
{
    if (static_cast<int>(w.size()) != rank) {
        fail(Errc::invariant_violation, "weight " + to_string(w) + " does not have rank " + std::to_string(rank));
    }
}

// sin(x/2)/(x/2) with x = s theta
PowerSeries sinc_half(const Rational &s, int order)
{
    PowerSeries p{std::vector<Rational>(static_cast<std::size_t>(order + 1))};
    const Rational h = s / 2;
    for (int m = 0; 2 * m <= order; ++m) {
        Rational c = pow(h, 2 * m) / Rational(factorial(static_cast<unsigned>(2 * m + 1)));
        p.coeffs[static_cast<std::size_t>(2 * m)] = m % 2 == 0 ? c : Rational(-c);
    }
    return p;
}

int dot(const Weight &a, const Weight &b)
{
    if (a.size() != b.size()) {
        fail(Errc::invariant_violation, "root and direction have different rank");
    }
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace

RationalCharacter td_factor(const std::vector<Weight> &weights, int rank)
{
    std::vector<DenominatorFactor> den;
    for (const auto &w : weights) {
        check_rank(w, rank);
        if (is_zero_weight(w)) {
            fail(Errc::zero_weight, "tangent weight 0 in a Todd factor; split the locus");
        }
        den.push_back({-w, 1, Direction::unset});
    }
    return RationalCharacter::fraction(LaurentPolynomial::constant(rank, 1), std::move(den));
}

RationalCharacter dh_factor(const TorusElement &h, const std::vector<Weight> &normal_weights, int rank)
{
    if (static_cast<int>(h.angles.size()) != rank) {
        fail(Errc::invariant_violation, "torus element does not have rank " + std::to_string(rank));
    }
    LaurentPolynomial p = LaurentPolynomial::constant(rank, 1);
    for (const auto &w : normal_weights) {
        check_rank(w, rank);
        Rational phase = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            phase += h.angles[i] * w[i];
        }
        const Rational twice = 2 * phase;
        if (!is_integer(twice)) {
            fail(Errc::out_of_range, "h acts on weight " + to_string(w) + " by an eigenvalue other than +-1");
        }
        const Rational c = twice.get_num() % 2 == 0 ? 1 : -1;
        if (c == 1 && is_zero_weight(w)) {
            fail(Errc::not_normal, "h fixes the normal direction " + to_string(w));
        }
        LaurentPolynomial factor = LaurentPolynomial::constant(rank, 1);
        factor.add_term(w, -c);
        p = p * factor;
    }
    return RationalCharacter::from_laurent(p);
}

PowerSeries j_h_function(const std::vector<Weight> &roots, const Weight &direction, int order)
{
    PowerSeries p{std::vector<Rational>(static_cast<std::size_t>(order + 1))};
    p.coeffs[0] = 1;
    for (const auto &root : roots) {
        p = p * sinc_half(dot(root, direction), order);
    }
    return p;
}

PowerSeries ahat_squared_factor(const std::vector<Weight> &weights, const Weight &direction, int order)
{
    return j_h_function(weights, direction, order).reciprocal();
}

RationalCharacter circle_lattice_sum(const Weight &w)
{
    if (is_zero_weight(w)) {
        fail(Errc::zero_weight, "fixed circle with weight 0");
    }
    const int rank = static_cast<int>(w.size());
    const auto one = LaurentPolynomial::constant(rank, 1);
    return RationalCharacter::fraction(one, {{w, 1, Direction::positive}}) -
           RationalCharacter::fraction(one, {{w, 1, Direction::negative}});
}

RationalCharacter fixed_point_contribution(const FixedLocusDatum &d, PipelineCase c)
{
    const int rank = static_cast<int>(d.twist.size());
    if (rank == 0) {
        fail(Errc::invariant_violation, "locus '" + d.id + "' has no twist weight");
    }
    switch (c) {
        case PipelineCase::elliptic_etm:
            if (d.type != LocusType::isolated_point) {
                fail(Errc::invariant_violation, "locus '" + d.id + "': the E=TM case localizes to isolated points");
            }
            break;
        case PipelineCase::contact:
            if (d.type != LocusType::circle || !d.circle_weight || !d.tangent_weights.empty()) {
                fail(Errc::invariant_violation, "locus '" + d.id + "': the contact case needs a circle with E(h)=0 and a circle weight");
            }
            break;
        default:
            fail(Errc::invariant_violation, "case '" + std::string(pipeline_case_name(c)) + "' has no fixed-point contributions");
    }
    if (d.orientation_sign != 1 && d.orientation_sign != -1) {
        fail(Errc::invariant_violation, "locus '" + d.id + "' has orientation sign other than +-1");
    }

    std::vector<DenominatorFactor> den;
    for (const auto &w : d.tangent_weights) {
        check_rank(w, rank);
        if (is_zero_weight(w)) {
            fail(Errc::zero_weight, "locus '" + d.id + "' has a zero tangent weight");
        }
        den.push_back({-w, 1, Direction::unset});
    }
    for (const auto &n : d.normal_weights) {
        check_rank(n.w, rank);
        if (is_zero_weight(n.w)) {
            fail(Errc::zero_weight, "locus '" + d.id + "' has a zero normal weight");
        }
        den.push_back({n.w, 1, Direction::unset});
        if (!n.complex) {
            den.push_back({-n.w, 1, Direction::unset});
        }
    }
    if (!den.empty()) {
        if (d.directions.size() != 1 && d.directions.size() != den.size()) {
            fail(Errc::missing_expansion_direction, "locus '" + d.id + "' needs one expansion direction per factor");
        }
        for (std::size_t i = 0; i < den.size(); ++i) {
            den[i].direction = d.directions.size() == 1 ? d.directions[0] : d.directions[i];
            if (den[i].direction == Direction::unset) {
                fail(Errc::missing_expansion_direction, "locus '" + d.id + "' leaves a factor without direction");
            }
        }
    }

    RationalCharacter r = RationalCharacter::fraction(LaurentPolynomial::monomial(d.twist, d.orientation_sign), std::move(den));
    if (d.type == LocusType::circle) {
        check_rank(*d.circle_weight, rank);
        r = r * circle_lattice_sum(*d.circle_weight);
    }
    return r;
}

RationalCharacter localize_index(const std::vector<FixedLocusDatum> &data, PipelineCase c, const SeriesPolicy &policy)
{
    if (data.empty()) {
        fail(Errc::invariant_violation, "no fixed loci to localize to");
    }
    RationalCharacter total(static_cast<int>(data.front().twist.size()));
    for (const auto &d : data) {
        total += fixed_point_contribution(d, c);
    }
    total = total.canonical();
    expand_to_degree(total, policy); // throws non_integer_coefficients
    return total;
}

} // namespace equivar
