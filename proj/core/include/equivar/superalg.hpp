#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <equivar/rational.hpp>

namespace equivar {

class FormalModel;

using GenId = int;

enum class Parity { even, odd };

enum class GeneratorKind {
    plain_form,
    frame_form,       // alpha_j of an oriented frame
    closed_argument,  // u_j = D alpha_j, D-closed by definition
    fibre_coordinate, // xi^j
    fibre_coform,     // d xi^j
};

std::string_view kind_name(GeneratorKind kind) noexcept;
std::optional<GeneratorKind> parse_kind(std::string_view text) noexcept;

struct Generator {
    std::string name;
    Parity parity = Parity::even;
    int form_degree = 0;
    GeneratorKind kind = GeneratorKind::plain_form;
    std::string frame; // empty for plain forms
    int slot = 0;      // 1-based, 0 for plain forms
    bool basic = false;
    int frame_index = -1; // resolved by FormalModel::build

    /// Degree that counts towards the manifold-dimension cutoff. The closed
    /// arguments u_j are degree-0 symbols there, and fibre directions are
    /// budgeted separately from forms on M.
    int truncation_degree() const noexcept;
};

struct MultiIndex {
    std::vector<int> entries;

    static MultiIndex zero(int k) { return MultiIndex{std::vector<int>(static_cast<std::size_t>(k), 0)}; }

    int size() const noexcept { return static_cast<int>(entries.size()); }
    int order() const noexcept;
    Integer factorial() const;

    int &operator[](int j) { return entries[static_cast<std::size_t>(j)]; }
    int operator[](int j) const { return entries[static_cast<std::size_t>(j)]; }

    auto operator<=>(const MultiIndex &) const = default;
};

enum class DeltaArgument {
    closed, // delta^(I)(u), the calculus form
    moment, // delta^(I)(f), Taylor display form only
};

struct DeltaFactor {
    int frame = 0;
    MultiIndex deriv;
    DeltaArgument argument = DeltaArgument::closed;

    auto operator<=>(const DeltaFactor &) const = default;
};

/// x^a * delta * (odd generators, ascending id) * (even generators^e, ascending id).
/// `x` carries no trailing zeros.
struct Monomial {
    std::vector<int> x;
    std::optional<DeltaFactor> delta;
    std::vector<GenId> odd;
    std::vector<std::pair<GenId, int>> even;

    auto operator<=>(const Monomial &) const = default;
};

struct Term {
    Rational coeff;
    Monomial mono;
};

bool operator==(const Term &a, const Term &b);

/// Finite sum of normalized terms, sorted by monomial, with no zero coefficients.
class Element {
public:
    Element() = default;

    /// Sorts and merges terms that are individually in normal form.
    static Element from_terms(std::vector<Term> terms);
    static Element constant(const Rational &c);

    const std::vector<Term> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Element &operator+=(const Element &other);
    Element &operator-=(const Element &other);
    Element operator-() const;

    friend Element operator+(Element a, const Element &b) { return a += b; }
    friend Element operator-(Element a, const Element &b) { return a -= b; }
    friend Element operator*(const Rational &s, const Element &a);
    friend bool operator==(const Element &a, const Element &b) = default;

private:
    std::vector<Term> terms_;
};

/// Canonical ordering, delta rewrites and truncation. Returns nullopt if the term dies.
std::optional<Term> normalize_term(Term term, const FormalModel &m);

Element normal_form(const Element &a, const FormalModel &m);

Element multiply(const Element &a, const Element &b, const FormalModel &m);

/// a^n with a^0 = 1.
Element power(const Element &a, int n, const FormalModel &m);

/// D(X) = d - iota(X), acting as an odd derivation.
Element equivariant_differential(const Element &a, const FormalModel &m);

/// d and iota(X_a) on elements free of X, deltas and closed arguments.
Element exterior_derivative(const Element &a, const FormalModel &m);
Element contraction(const Element &a, int parameter, const FormalModel &m);

/// Extends `on_generator` as an odd derivation that kills X and delta
/// factors. Returns nullopt as soon as `on_generator` does.
using GeneratorRule = std::function<std::optional<Element>(GenId)>;
std::optional<Element> apply_odd_derivation(const Element &a, const FormalModel &m, const GeneratorRule &on_generator);

/// The term u_j^e delta^(I)(u) rewrite on a single term, exposed on its own.
Element delta_rewrite(const Term &term, const FormalModel &m);

int form_degree(const Monomial &mono, const FormalModel &m);

} // namespace equivar
