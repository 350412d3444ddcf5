#include <doctest.h>

#include "../support/checks.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

#include <equivar/element_text.hpp>
#include <equivar/genco.hpp>
#include <equivar/jform.hpp>
#include <equivar/model_io.hpp>
#include <equivar/random_models.hpp>

using namespace equivar;

namespace {

std::vector<std::vector<Rational>> rows(const RationalMatrix &A)
{
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(A.rows()));
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) {
            out[static_cast<std::size_t>(i)].push_back(A(i, j));
        }
    }
    return out;
}

oracle::Poly random_poly(std::mt19937_64 &rng, int k, int degree)
{
    oracle::Poly p;
    for (int t = 0; t < 6; ++t) {
        oracle::Exponent e(static_cast<std::size_t>(k), 0);
        int left = degree;
        for (int j = 0; j < k; ++j) {
            e[static_cast<std::size_t>(j)] = j + 1 == k ? left : gen::uniform(rng, 0, left);
            left -= e[static_cast<std::size_t>(j)];
        }
        p[e] += gen::small_rational(rng);
    }
    return p;
}

} // namespace

TEST_CASE("linear substitution agrees with pairing against test polynomials")
{
    std::mt19937_64 rng(gen::seed + 10);
    for (int trial = 0; trial < 150; ++trial) {
        const int k = gen::uniform(rng, 1, 3);
        const FormalModel m = FormalModel::build(torus_model_spec(k));
        const RationalMatrix A = gen::invertible(rng, k, false);
        MultiIndex I = MultiIndex::zero(k);
        for (int j = 0; j < k; ++j) {
            I[j] = gen::uniform(rng, 0, 2);
        }
        const Element sub = delta_linear_substitute(DeltaFactor{0, I, DeltaArgument::closed}, A, OrientationMode::absolute);
        const oracle::Poly phi = random_poly(rng, k, I.order());
        Rational engine = 0;
        for (const auto &t : sub.terms()) {
            REQUIRE(t.mono.delta);
            CHECK(t.mono.delta->deriv.order() == I.order());
            engine += t.coeff * oracle::delta_pairing_identity(t.mono.delta->deriv.entries, phi);
        }
        CHECK(engine == oracle::delta_pairing(I.entries, rows(A), phi));
    }
}

TEST_CASE("substitution composes and respects orientation")
{
    std::mt19937_64 rng(gen::seed + 11);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = gen::uniform(rng, 1, 3);
        const FormalModel m = FormalModel::build(torus_model_spec(k));
        const RationalMatrix A = gen::invertible(rng, k, true);
        const RationalMatrix B = gen::invertible(rng, k, true);
        MultiIndex I = MultiIndex::zero(k);
        for (int j = 0; j < k; ++j) {
            I[j] = gen::uniform(rng, 0, 4 / k);
        }
        const Element d = m.delta(0, I);
        CHECK(delta_linear_substitute(delta_linear_substitute(d, A), B) == delta_linear_substitute(d, A * B));
        CHECK(delta_linear_substitute(d, A) == delta_linear_substitute(d, A, OrientationMode::absolute));
    }
    const FormalModel m = FormalModel::build(torus_model_spec(1));
    const Element d = m.delta(0, MultiIndex::zero(1));
    auto err = check::engine_error([&] { (void)delta_linear_substitute(d, RationalMatrix(1, 1, {-2})); });
    REQUIRE(err);
    CHECK(err->code == Errc::non_orientable);
    // delta(-2u) = delta(u)/2, delta'(2u) = delta'(u)/4
    CHECK(delta_linear_substitute(d, RationalMatrix(1, 1, {-2}), OrientationMode::absolute) ==
          Rational(1, 2) * d);
    CHECK(delta_linear_substitute(m.delta(0, MultiIndex{{1}}), RationalMatrix(1, 1, {2})) ==
          Rational(1, 4) * m.delta(0, MultiIndex{{1}}));
}

TEST_CASE("Taylor display of the contact form")
{
    const FormalModel m = FormalModel::build(builtin_model("s3-contact").spec);
    const JForm j = j_form(m, "E0");
    CHECK(to_text(taylor_expand_delta(j.value, "E0", m), m) == "delta[E0;f]*alpha + delta[E0;f]^(1)*alpha*dalpha");

    const FormalModel h = FormalModel::build(builtin_model("t2-principal").spec);
    const Element display = taylor_expand_delta(j_form(h, "P").value, "P", h);
    CHECK(display.size() == 6);
}

TEST_CASE("fibre extension")
{
    const FormalModel m = FormalModel::build(torus_model_spec(2));
    const FormalModel f = with_fibre(m, "E0");
    CHECK(f.name() == "t2-on-t2+fibre");
    CHECK(f.manifold_dim() == m.manifold_dim());
    CHECK(exterior_derivative(f.gen("xi_E0_1"), f) == f.gen("dxi_E0_1"));
    CHECK(f.generator(f.generator_id("dxi_E0_2")).parity == Parity::odd);

    const Element j = j_form(m, "E0").value;
    CHECK(transfer(transfer(j, m, f), f, m) == j);

    auto err = check::engine_error([&] { (void)fourier_fibre_integrate(m, "E0"); });
    REQUIRE(err);
    CHECK(err->code == Errc::missing_fibre);
}

TEST_CASE("Fourier fibre integral reproduces J on built-in models")
{
    for (const auto &name : builtin_model_names()) {
        const FormalModel m = FormalModel::build(builtin_model(name).spec);
        for (const auto &F : m.frames()) {
            const FormalModel f = with_fibre(m, F.id);
            CHECK_MESSAGE(fourier_fibre_integrate(f, F.id) == transfer(j_form(m, F.id).value, m, f), name);
        }
    }
}

TEST_CASE("Fourier fibre integral reproduces J on random models")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const FormalModel m = random_model(seed, {.max_rank = 2});
        const FormalModel f = with_fibre(m, "E0");
        CHECK_MESSAGE(fourier_fibre_integrate(f, "E0") == transfer(j_form(m, "E0").value, m, f), "seed " << seed);
    }
}
