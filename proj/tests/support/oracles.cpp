#include "oracles.hpp"

#include <cstdlib>
#include <stdexcept>

namespace oracle {

std::map<int, Integer> weyl_formula(int n)
{
    // numerator in powers of t, divided by t - t^{-1} from the top degree down
    std::map<int, Integer> num{{n + 1, 1}, {-n - 1, -1}};
    std::map<int, Integer> q;
    while (!num.empty()) {
        auto top = std::prev(num.end());
        const int d = top->first;
        const Integer c = top->second;
        q[d - 1] += c;
        num[d] -= c;
        num[d - 2] += c;
        for (auto it = num.begin(); it != num.end();) {
            it = it->second == 0 ? num.erase(it) : std::next(it);
        }
        if (d < -n - 1) {
            throw std::logic_error("Weyl numerator does not divide");
        }
    }
    return q;
}

Integer cech_euler_characteristic(int n)
{
    // sections on U0 cap U1 are z0^a z1^b with a + b = n; H^0 has a, b >= 0, H^1 has a, b <= -1
    Integer h0 = 0;
    Integer h1 = 0;
    for (int a = -std::abs(n) - 2; a <= std::abs(n) + 2; ++a) {
        const int b = n - a;
        h0 += a >= 0 && b >= 0 ? 1 : 0;
        h1 += a <= -1 && b <= -1 ? 1 : 0;
    }
    return h0 - h1;
}

Integer cr_monomial_count(int a, int b, int bound)
{
    Integer c = 0;
    for (int i = 0; i <= bound; ++i) {
        for (int j = 0; j <= bound; ++j) {
            c += i == a && j == b ? 1 : 0;
        }
    }
    return c;
}

std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            throw std::logic_error("singular matrix");
        }
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && a[r][col] != 0) {
                const Rational f = a[r][col];
                for (std::size_t j = 0; j < n; ++j) {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
    }
    return inv;
}

Rational determinant(std::vector<std::vector<Rational>> a)
{
    // Laplace expansion; fine for n <= 4
    const std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    Rational det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) {
                    row.push_back(a[r][c]);
                }
            }
            minor.push_back(row);
        }
        const Rational term = a[0][j] * determinant(minor);
        det += j % 2 == 0 ? term : Rational(-term);
    }
    return det;
}

namespace {

Poly multiply(const Poly &a, const Poly &b)
{
    Poly out;
    for (const auto &[ea, ca] : a) {
        for (const auto &[eb, cb] : b) {
            Exponent e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out[e] += ca * cb;
        }
    }
    return out;
}

Integer multi_factorial(const std::vector<int> &I)
{
    Integer f = 1;
    for (int i : I) {
        for (int j = 2; j <= i; ++j) {
            f *= j;
        }
    }
    return f;
}

int order(const std::vector<int> &I)
{
    int s = 0;
    for (int i : I) {
        s += i;
    }
    return s;
}

Rational coefficient(const Poly &p, const Exponent &e)
{
    auto it = p.find(e);
    return it == p.end() ? Rational(0) : it->second;
}

} // namespace

Rational delta_pairing_identity(const std::vector<int> &J, const Poly &phi)
{
    const Rational c = Rational(multi_factorial(J)) * coefficient(phi, J);
    return order(J) % 2 == 0 ? c : Rational(-c);
}

Rational delta_pairing(const std::vector<int> &I, const std::vector<std::vector<Rational>> &A, const Poly &phi)
{
    const std::size_t k = I.size();
    const auto Ainv = inverse(A);
    // phi(A^{-1} v): substitute u_i = sum_j Ainv_ij v_j monomial by monomial
    Poly composed;
    for (const auto &[e, c] : phi) {
        Poly acc{{Exponent(k, 0), c}};
        for (std::size_t i = 0; i < k; ++i) {
            Poly ui;
            for (std::size_t j = 0; j < k; ++j) {
                if (Ainv[i][j] != 0) {
                    Exponent ej(k, 0);
                    ej[j] = 1;
                    ui[ej] = Ainv[i][j];
                }
            }
            for (int p = 0; p < e[i]; ++p) {
                acc = multiply(acc, ui);
            }
        }
        for (const auto &[ea, ca] : acc) {
            composed[ea] += ca;
        }
    }
    Rational det = determinant(A);
    if (det < 0) {
        det = -det;
    }
    return delta_pairing_identity(I, composed) / det;
}

std::map<std::vector<int>, Rational> brute_series(const std::map<std::vector<int>, Rational> &numerator,
                                                  const std::vector<SeriesFactor> &factors, int window, int bound)
{
    std::map<std::vector<int>, Rational> out;
    const std::size_t m = factors.size();
    std::vector<int> n(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        n[i] = factors[i].positive ? 0 : 1;
    }
    while (true) {
        for (const auto &[w0, c0] : numerator) {
            std::vector<int> w = w0;
            Rational c = c0;
            for (std::size_t i = 0; i < m; ++i) {
                const auto &f = factors[i];
                for (std::size_t a = 0; a < w.size(); ++a) {
                    w[a] += (f.positive ? 1 : -1) * n[i] * f.w[a];
                }
                Rational ci = 1;
                for (int p = 0; p < n[i]; ++p) {
                    ci *= f.positive ? f.c : Rational(1 / f.c);
                }
                c *= f.positive ? ci : Rational(-ci);
            }
            int l1 = 0;
            for (int x : w) {
                l1 += std::abs(x);
            }
            if (l1 <= window) {
                out[w] += c;
            }
        }
        std::size_t i = 0;
        while (i < m && n[i] == bound) {
            n[i] = factors[i].positive ? 0 : 1;
            ++i;
        }
        if (i == m) {
            break;
        }
        ++n[i];
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

std::vector<Rational> sinc_power(int p, int order)
{
    std::vector<Rational> sinc(static_cast<std::size_t>(order) + 1, 0);
    Integer fact = 1;
    for (int n = 0; n <= order; ++n) {
        // sin(x)/x = sum (-1)^k x^{2k} / (2k+1)!
        fact *= n + 1;
        if (n % 2 == 0) {
            sinc[static_cast<std::size_t>(n)] = Rational((n / 2) % 2 == 0 ? 1 : -1, 1) / Rational(fact);
        }
    }
    std::vector<Rational> out(sinc.size(), 0);
    out[0] = 1;
    for (int k = 0; k < p; ++k) {
        std::vector<Rational> next(out.size(), 0);
        for (std::size_t a = 0; a < out.size(); ++a) {
            for (std::size_t b = 0; a + b < out.size(); ++b) {
                next[a + b] += out[a] * sinc[b];
            }
        }
        out = next;
    }
    return out;
}

std::vector<Rational> sin_squared(int order)
{
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, 0);
    Integer fact = 1;
    Integer two_pow = 1;
    for (int n = 1; n <= order; ++n) {
        fact *= n;
        two_pow *= 2;
        if (n % 2 == 0) {
            // -cos(2 theta)/2 contributes -(-1)^{n/2} 2^n theta^n / (2 n!)
            const Rational c = Rational(two_pow) / Rational(2 * fact);
            out[static_cast<std::size_t>(n)] = (n / 2) % 2 == 0 ? Rational(-c) : c;
        }
    }
    return out;
}

} // namespace oracle
