#include <equivar/error.hpp>
#include <equivar/laurent.hpp>

#include <cstdlib>
#include <sstream>

namespace equivar {

Weight operator+(const Weight &a, const Weight &b)
{
    if (a.size() != b.size()) {
        fail(Errc::invariant_violation, "weights of different rank");
    }
    Weight c = a;
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] += b[i];
    }
    return c;
}

Weight operator-(const Weight &a)
{
    return scaled(a, -1);
}

Weight scaled(const Weight &w, int n)
{
    Weight c = w;
    for (auto &x : c) {
        x *= n;
    }
    return c;
}

int l1_norm(const Weight &w)
{
    int s = 0;
    for (int x : w) {
        s += std::abs(x);
    }
    return s;
}

bool is_zero_weight(const Weight &w)
{
    for (int x : w) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Weight &w)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        out << (i ? "," : "") << w[i];
    }
    out << ')';
    return out.str();
}

LaurentPolynomial LaurentPolynomial::monomial(const Weight &w, const Rational &c)
{
    LaurentPolynomial p(static_cast<int>(w.size()));
    p.add_term(w, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::constant(int rank, const Rational &c)
{
    return monomial(Weight(static_cast<std::size_t>(rank), 0), c);
}

void LaurentPolynomial::check_rank(const Weight &w) const
{
    if (static_cast<int>(w.size()) != rank_) {
        fail(Errc::invariant_violation, "weight " + equivar::to_string(w) + " does not have rank " + std::to_string(rank_));
    }
}

Rational LaurentPolynomial::coefficient(const Weight &w) const
{
    check_rank(w);
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPolynomial::has_integer_coefficients() const
{
    for (const auto &[w, c] : terms_) {
        if (!is_integer(c)) {
            return false;
        }
    }
    return true;
}

void LaurentPolynomial::add_term(const Weight &w, const Rational &c)
{
    check_rank(w);
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &o)
{
    if (o.rank_ != rank_) {
        fail(Errc::invariant_violation, "adding Laurent polynomials of different rank");
    }
    for (const auto &[w, c] : o.terms_) {
        add_term(w, c);
    }
    return *this;
}

LaurentPolynomial &LaurentPolynomial::operator-=(const LaurentPolynomial &o)
{
    return *this += -o;
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    return Rational(-1) * *this;
}

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    if (a.rank_ != b.rank_) {
        fail(Errc::invariant_violation, "multiplying Laurent polynomials of different rank");
    }
    LaurentPolynomial p(a.rank_);
    for (const auto &[wa, ca] : a.terms_) {
        for (const auto &[wb, cb] : b.terms_) {
            p.add_term(wa + wb, ca * cb);
        }
    }
    return p;
}

LaurentPolynomial operator*(const Rational &s, const LaurentPolynomial &a)
{
    LaurentPolynomial p(a.rank_);
    if (s == 0) {
        return p;
    }
    for (const auto &[w, c] : a.terms_) {
        p.terms_.emplace(w, c * s);
    }
    return p;
}

bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_binomial(const Weight &w, const Rational &c) const
{
    check_rank(w);
    if (is_zero_weight(w)) {
        if (c == 1) {
            return std::nullopt;
        }
        return Rational(1 / (1 - c)) * *this;
    }
    if (c == 0) {
        return *this;
    }
    std::size_t pivot = 0;
    while (w[pivot] == 0) {
        ++pivot;
    }
    auto floor_div = [](int a, int b) {
        int q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) {
            --q;
        }
        return q;
    };

    // split into cosets of Z w; each coset is a Laurent polynomial in s = t^w
    std::map<Weight, std::map<int, Rational>> cosets;
    for (const auto &[e, coef] : terms_) {
        const int n = floor_div(e[pivot], w[pivot]);
        const Weight base = e + scaled(w, -n);
        cosets[base][n] += coef;
    }

    LaurentPolynomial q(rank_);
    for (const auto &[base, series] : cosets) {
        const int lo = series.begin()->first;
        const int hi = series.rbegin()->first;
        // a_n = q_n - c q_{n-1}
        Rational prev = 0;
        for (int n = lo; n < hi; ++n) {
            auto it = series.find(n);
            const Rational a = it == series.end() ? Rational(0) : it->second;
            const Rational qn = a + c * prev;
            q.add_term(base + scaled(w, n), qn);
            prev = qn;
        }
        if (series.rbegin()->second + c * prev != 0) {
            return std::nullopt;
        }
    }
    return q;
}

std::string LaurentPolynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[w, c] = *it;
        const bool neg = c < 0;
        const Rational mag = abs(c);
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string body;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 0) {
                continue;
            }
            if (!body.empty()) {
                body += '*';
            }
            body += rank_ == 1 ? std::string("t") : "t" + std::to_string(i + 1);
            if (w[i] != 1) {
                body += "^" + std::to_string(w[i]);
            }
        }
        if (body.empty()) {
            out << mag.get_str();
        } else if (mag == 1) {
            out << body;
        } else {
            out << mag.get_str() << '*' << body;
        }
    }
    return out.str();
}

} // namespace equivar
