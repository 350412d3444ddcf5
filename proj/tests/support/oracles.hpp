#pragma once

// Test-only reference computations. None of these call into the engine's
// algebra; they work on plain maps and integers.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <equivar/rational.hpp>

namespace oracle {

using equivar::Integer;
using equivar::Rational;
using Exponent = std::vector<int>;
using Poly = std::map<Exponent, Rational>;

/// Weyl character formula (t^{n+1} - t^{-n-1}) / (t - t^{-1}) by long division.
std::map<int, Integer> weyl_formula(int n);

/// dim H^0(O(n)) - dim H^1(O(n)) on CP^1 from Cech cocycles z0^a z1^b.
Integer cech_euler_characteristic(int n);

/// Number of holomorphic monomials z1^a z2^b with the given exponents.
Integer cr_monomial_count(int a, int b, int bound);

/// <delta^(I)(A u), phi> = (-1)^|I| |det A|^{-1} I! [v^I] phi(A^{-1} v).
Rational delta_pairing(const std::vector<int> &I, const std::vector<std::vector<Rational>> &A, const Poly &phi);

/// <delta^(J)(u), phi> = (-1)^|J| J! [u^J] phi.
Rational delta_pairing_identity(const std::vector<int> &J, const Poly &phi);

/// Coefficients of prod_i [1/(1 - c_i t^{w_i})]_{dir_i} on the L1 window,
/// by enumerating exponent vectors n_i in [0, bound] (or [1, bound] for the
/// negative side).
struct SeriesFactor {
    std::vector<int> w;
    Rational c = 1;
    bool positive = true;
};
std::map<std::vector<int>, Rational> brute_series(const std::map<std::vector<int>, Rational> &numerator,
                                                  const std::vector<SeriesFactor> &factors, int window, int bound);

/// Taylor coefficients of (sin(theta)/theta)^p up to theta^order.
std::vector<Rational> sinc_power(int p, int order);

/// Taylor coefficients of sin(theta)^2 = (1 - cos(2 theta))/2 up to theta^order.
std::vector<Rational> sin_squared(int order);

std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> a);
Rational determinant(std::vector<std::vector<Rational>> a);

} // namespace oracle
