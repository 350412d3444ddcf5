#include <equivar/error.hpp>
#include <equivar/rational.hpp>

#include <cctype>

namespace equivar {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) {
        fail(Errc::parse_error, "malformed rational literal '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        fail(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational &q)
{
    return q.get_str();
}

std::string to_string(const Integer &z)
{
    return z.get_str();
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer falling_factorial(unsigned n, unsigned k)
{
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
    }
    return r;
}

Rational pow(const Rational &base, int exponent)
{
    Rational result = 1;
    Rational b = exponent < 0 ? Rational(1 / base) : base;
    for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
        result *= b;
    }
    return result;
}

} // namespace equivar
