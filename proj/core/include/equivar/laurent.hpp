#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <equivar/rational.hpp>

namespace equivar {

/// Character t -> t^w of a rank-l torus.
using Weight = std::vector<int>;

Weight operator+(const Weight &a, const Weight &b);
Weight operator-(const Weight &a);
Weight scaled(const Weight &w, int n);
int l1_norm(const Weight &w);
bool is_zero_weight(const Weight &w);
std::string to_string(const Weight &w);

class LaurentPolynomial {
public:
    explicit LaurentPolynomial(int rank = 1) : rank_(rank) {}

    static LaurentPolynomial monomial(const Weight &w, const Rational &c = 1);
    static LaurentPolynomial constant(int rank, const Rational &c);

    int rank() const noexcept { return rank_; }
    const std::map<Weight, Rational> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Weight &w) const;
    bool has_integer_coefficients() const;

    void add_term(const Weight &w, const Rational &c);

    LaurentPolynomial &operator+=(const LaurentPolynomial &o);
    LaurentPolynomial &operator-=(const LaurentPolynomial &o);
    LaurentPolynomial operator-() const;
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);
    friend LaurentPolynomial operator*(const Rational &s, const LaurentPolynomial &a);
    friend bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b);

    /// Exact quotient by (1 - c t^w), or nullopt when it does not divide.
    std::optional<LaurentPolynomial> divide_binomial(const Weight &w, const Rational &c) const;

    /// "t^2 + 1 + t^-2" for rank 1, variables t1..tl otherwise.
    std::string to_string() const;

private:
    void check_rank(const Weight &w) const;

    int rank_;
    std::map<Weight, Rational> terms_;
};

} // namespace equivar
