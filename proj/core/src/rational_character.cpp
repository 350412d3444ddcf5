#include <equivar/error.hpp>
#include <equivar/rational_character.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <tuple>

namespace equivar {

std::string_view direction_name(Direction d) noexcept
{
    switch (d) {
        case Direction::positive: return "positive";
        case Direction::negative: return "negative";
        case Direction::unset: break;
    }
    return "unset";
}

std::optional<Direction> parse_direction(std::string_view text) noexcept
{
    for (auto d : {Direction::unset, Direction::positive, Direction::negative}) {
        if (direction_name(d) == text) {
            return d;
        }
    }
    return std::nullopt;
}

bool operator==(const DenominatorFactor &a, const DenominatorFactor &b)
{
    return a.w == b.w && a.c == b.c && a.direction == b.direction;
}

bool operator<(const DenominatorFactor &a, const DenominatorFactor &b)
{
    if (a.w != b.w) {
        return a.w < b.w;
    }
    if (a.c != b.c) {
        return a.c < b.c;
    }
    return a.direction < b.direction;
}

RationalCharacter RationalCharacter::from_laurent(const LaurentPolynomial &p)
{
    RationalCharacter r(p.rank());
    if (!p.is_zero()) {
        r.pieces_.push_back({p, {}});
    }
    return r;
}

RationalCharacter RationalCharacter::fraction(const LaurentPolynomial &numerator, std::vector<DenominatorFactor> denominator)
{
    RationalCharacter r(numerator.rank());
    for (const auto &f : denominator) {
        if (static_cast<int>(f.w.size()) != r.rank_) {
            fail(Errc::invariant_violation, "denominator weight " + equivar::to_string(f.w) + " has the wrong rank");
        }
        if (is_zero_weight(f.w) && f.c == 1) {
            fail(Errc::zero_weight, "denominator 1 - t^0 vanishes identically");
        }
    }
    if (!numerator.is_zero()) {
        r.pieces_.push_back({numerator, std::move(denominator)});
    }
    return r;
}

namespace {

bool lex_negative(const Weight &w)
{
    for (int x : w) {
        if (x != 0) {
            return x < 0;
        }
    }
    return false;
}

Direction flipped(Direction d)
{
    switch (d) {
        case Direction::positive: return Direction::negative;
        case Direction::negative: return Direction::positive;
        case Direction::unset: break;
    }
    return Direction::unset;
}

void cancel(CharacterPiece &p)
{
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < p.denominator.size(); ++i) {
            const auto &f = p.denominator[i];
            if (auto q = p.numerator.divide_binomial(f.w, f.c)) {
                p.numerator = std::move(*q);
                p.denominator.erase(p.denominator.begin() + static_cast<std::ptrdiff_t>(i));
                progress = true;
                break;
            }
        }
    }
}

} // namespace

RationalCharacter RationalCharacter::canonical() const
{
    std::vector<CharacterPiece> work;
    for (const auto &piece : pieces_) {
        CharacterPiece p{piece.numerator, {}};
        for (auto f : piece.denominator) {
            if (is_zero_weight(f.w)) {
                if (f.c == 1) {
                    fail(Errc::zero_weight, "denominator 1 - t^0 vanishes identically");
                }
                p.numerator = Rational(1 / (1 - f.c)) * p.numerator;
                continue;
            }
            if (lex_negative(f.w)) {
                // 1/(1 - c t^w) = -c^{-1} t^{-w} / (1 - c^{-1} t^{-w})
                p.numerator = p.numerator * LaurentPolynomial::monomial(-f.w, Rational(-1 / f.c));
                f = DenominatorFactor{-f.w, Rational(1 / f.c), flipped(f.direction)};
            }
            p.denominator.push_back(std::move(f));
        }
        std::sort(p.denominator.begin(), p.denominator.end());
        cancel(p);
        std::sort(p.denominator.begin(), p.denominator.end());
        if (!p.numerator.is_zero()) {
            work.push_back(std::move(p));
        }
    }

    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < work.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !merged; ++j) {
                if (work[i].denominator == work[j].denominator) {
                    work[i].numerator += work[j].numerator;
                    work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
                    cancel(work[i]);
                    if (work[i].numerator.is_zero()) {
                        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                    }
                    merged = true;
                }
            }
        }
    }
    std::sort(work.begin(), work.end(), [](const CharacterPiece &a, const CharacterPiece &b) {
        return std::lexicographical_compare(a.denominator.begin(), a.denominator.end(), b.denominator.begin(), b.denominator.end());
    });
    RationalCharacter out(rank_);
    out.pieces_ = std::move(work);
    return out;
}

std::optional<LaurentPolynomial> RationalCharacter::as_laurent() const
{
    const RationalCharacter c = canonical();
    LaurentPolynomial p(rank_);
    for (const auto &piece : c.pieces_) {
        if (!piece.denominator.empty()) {
            return std::nullopt;
        }
        p += piece.numerator;
    }
    return p;
}

RationalCharacter &RationalCharacter::operator+=(const RationalCharacter &o)
{
    if (o.rank_ != rank_) {
        fail(Errc::invariant_violation, "adding characters of different rank");
    }
    pieces_.insert(pieces_.end(), o.pieces_.begin(), o.pieces_.end());
    return *this;
}

RationalCharacter operator-(RationalCharacter a, const RationalCharacter &b)
{
    return a += Rational(-1) * b;
}

RationalCharacter operator*(const RationalCharacter &a, const RationalCharacter &b)
{
    if (a.rank_ != b.rank_) {
        fail(Errc::invariant_violation, "multiplying characters of different rank");
    }
    RationalCharacter r(a.rank_);
    for (const auto &pa : a.pieces_) {
        for (const auto &pb : b.pieces_) {
            CharacterPiece p{pa.numerator * pb.numerator, pa.denominator};
            p.denominator.insert(p.denominator.end(), pb.denominator.begin(), pb.denominator.end());
            if (!p.numerator.is_zero()) {
                r.pieces_.push_back(std::move(p));
            }
        }
    }
    return r;
}

RationalCharacter operator*(const Rational &s, const RationalCharacter &a)
{
    RationalCharacter r(a.rank_);
    if (s == 0) {
        return r;
    }
    for (const auto &p : a.pieces_) {
        r.pieces_.push_back({s * p.numerator, p.denominator});
    }
    return r;
}

std::string RationalCharacter::to_string() const
{
    if (pieces_.empty()) {
        return "0";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto &p = pieces_[i];
        out << (i ? " + " : "") << '(' << p.numerator.to_string() << ')';
        for (const auto &f : p.denominator) {
            out << " / (1 - " << f.c.get_str() << "*t^" << equivar::to_string(f.w) << ")[" << direction_name(f.direction) << ']';
        }
    }
    return out.str();
}

DistributionalCharacter DistributionalCharacter::window(int rank, int max_degree, std::map<Weight, Integer> coefficients)
{
    DistributionalCharacter d;
    d.rank_ = rank;
    d.max_degree_ = max_degree;
    for (auto &[w, c] : coefficients) {
        if (static_cast<int>(w.size()) != rank || l1_norm(w) > max_degree) {
            fail(Errc::out_of_range, "weight " + to_string(w) + " lies outside the window");
        }
        if (c != 0) {
            d.coefficients_.emplace(w, c);
        }
    }
    return d;
}

DistributionalCharacter DistributionalCharacter::lattice(int rank, Integer value)
{
    DistributionalCharacter d;
    d.rank_ = rank;
    d.lattice_ = true;
    d.lattice_value_ = std::move(value);
    return d;
}

Integer multiplicity(const DistributionalCharacter &d, const Weight &w)
{
    if (static_cast<int>(w.size()) != d.rank()) {
        fail(Errc::out_of_range, "weight " + to_string(w) + " has the wrong rank");
    }
    if (d.is_lattice()) {
        return d.lattice_value();
    }
    if (l1_norm(w) > d.max_degree()) {
        fail(Errc::out_of_range, "weight " + to_string(w) + " lies outside the expanded window");
    }
    auto it = d.coefficients().find(w);
    return it == d.coefficients().end() ? Integer(0) : it->second;
}

namespace {

int dot(const Weight &a, const Weight &b)
{
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

// Smallest-box integer functional that is positive on every step vector.
std::optional<Weight> pointed_functional(const std::vector<Weight> &steps, int rank)
{
    for (int box = 1; box <= 4; ++box) {
        Weight xi(static_cast<std::size_t>(rank), -box);
        while (true) {
            bool ok = true;
            for (const auto &v : steps) {
                ok = ok && dot(xi, v) >= 1;
            }
            if (ok) {
                return xi;
            }
            std::size_t i = 0;
            while (i < xi.size() && xi[i] == box) {
                xi[i] = -box;
                ++i;
            }
            if (i == xi.size()) {
                break;
            }
            ++xi[i];
        }
    }
    return std::nullopt;
}

} // namespace

DistributionalCharacter expand_to_degree(const RationalCharacter &r, const SeriesPolicy &policy)
{
    if (policy.max_degree < 0) {
        fail(Errc::out_of_range, "maxDegree must be non-negative");
    }
    const int D = policy.max_degree;
    const int rank = r.rank();
    std::map<Weight, Rational> acc;
    auto add = [&](const Weight &w, const Rational &c) {
        if (l1_norm(w) <= D && c != 0) {
            acc[w] += c;
        }
    };

    const RationalCharacter canon = r.canonical();
    for (const auto &piece : canon.pieces()) {
        if (piece.denominator.empty()) {
            for (const auto &[w, c] : piece.numerator.terms()) {
                add(w, c);
            }
            continue;
        }
        std::vector<Weight> steps;
        std::vector<Rational> ratio;
        std::vector<int> first;
        for (const auto &f : piece.denominator) {
            if (f.direction == Direction::unset) {
                fail(Errc::missing_expansion_direction, "factor 1 - t^" + to_string(f.w) + " has no expansion direction");
            }
            const bool pos = f.direction == Direction::positive;
            steps.push_back(pos ? f.w : -f.w);
            ratio.push_back(pos ? f.c : Rational(1 / f.c));
            first.push_back(pos ? 0 : 1);
        }
        const auto xi = pointed_functional(steps, rank);
        if (!xi) {
            fail(Errc::missing_expansion_direction, "expansion directions of " + r.to_string() + " admit no common cone");
        }
        int xi_max = 0;
        for (int x : *xi) {
            xi_max = std::max(xi_max, std::abs(x));
        }
        const int ceiling = xi_max * D;

        for (const auto &[a, ca] : piece.numerator.terms()) {
            // negative factors contribute -1 each
            Rational sign = 1;
            for (int f0 : first) {
                if (f0 == 1) {
                    sign = -sign;
                }
            }
            std::function<void(std::size_t, Weight, Rational)> walk = [&](std::size_t f, Weight pos, Rational c) {
                if (f == steps.size()) {
                    add(pos, c);
                    return;
                }
                Weight p = pos + scaled(steps[f], first[f]);
                Rational cc = c * pow(ratio[f], first[f]);
                while (dot(*xi, p) <= ceiling) {
                    walk(f + 1, p, cc);
                    p = p + steps[f];
                    cc *= ratio[f];
                }
            };
            walk(0, a, sign * ca);
        }
    }

    std::map<Weight, Integer> out;
    for (auto &[w, c] : acc) {
        if (c == 0) {
            continue;
        }
        if (!is_integer(c)) {
            fail(Errc::non_integer_coefficients, "coefficient " + c.get_str() + " at weight " + to_string(w));
        }
        out.emplace(w, c.get_num());
    }
    return DistributionalCharacter::window(rank, D, std::move(out));
}

} // namespace equivar
