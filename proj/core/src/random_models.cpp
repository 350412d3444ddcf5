#include <equivar/error.hpp>
#include <equivar/random_models.hpp>

#include <algorithm>

namespace equivar {

int draw(std::mt19937_64 &rng, int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

namespace {

Rational small_rational(std::mt19937_64 &rng)
{
    const int den = draw(rng, 0, 3) == 0 ? draw(rng, 2, 3) : 1;
    Rational q(draw(rng, -3, 3), den);
    q.canonicalize();
    return q;
}

std::string rational_text(const Rational &q)
{
    return q.get_str();
}

std::optional<ModelSpec> attempt(std::mt19937_64 &rng, const RandomModelOptions &opts)
{
    const int r = draw(rng, 1, std::max(1, opts.max_parameters));
    const int k = draw(rng, 0, std::min(opts.max_rank, r));
    ModelSpec s;
    s.manifold_dim = draw(rng, std::max(k, 1), opts.max_dim);
    for (int a = 1; a <= r; ++a) {
        s.parameters.push_back("X" + std::to_string(a));
    }

    RationalMatrix f(k, r);
    for (int j = 0; j < k; ++j) {
        for (int a = 0; a < r; ++a) {
            f(j, a) = small_rational(rng);
        }
    }
    if (f.rank() != k) {
        return std::nullopt;
    }

    FrameSpec frame;
    frame.id = "E0";
    frame.rank = k;
    for (int j = 1; j <= k; ++j) {
        const std::string alpha = "alpha" + std::to_string(j);
        s.generators.push_back({alpha, Parity::odd, 1, GeneratorKind::frame_form, "E0", j, false});
        s.generators.push_back({"u" + std::to_string(j), Parity::even, 2, GeneratorKind::closed_argument, "E0", j, false});
        frame.slots.push_back(alpha);
        std::vector<std::string> iota;
        for (int a = 0; a < r; ++a) {
            iota.push_back(rational_text(-f(j - 1, a)));
        }
        s.iota_table[alpha] = std::move(iota);
        if (draw(rng, 0, 1) == 1) {
            const std::string da = "dalpha" + std::to_string(j);
            s.generators.push_back({da, Parity::even, 2, GeneratorKind::plain_form, "", 0, false});
            s.d_table[alpha] = da;
        } else {
            s.d_table[alpha] = "0";
        }
    }
    if (k > 0) {
        frame.moment_samples.push_back(f);
    }
    s.frames.push_back(std::move(frame));

    // closed odd forms with constant contractions, closed even forms
    const int n_beta = draw(rng, 0, 2);
    for (int i = 1; i <= n_beta; ++i) {
        const std::string beta = "beta" + std::to_string(i);
        s.generators.push_back({beta, Parity::odd, 1, GeneratorKind::plain_form, "", 0, false});
        std::vector<std::string> iota;
        for (int a = 0; a < r; ++a) {
            iota.push_back(rational_text(small_rational(rng)));
        }
        s.iota_table[beta] = std::move(iota);
    }
    const int n_gamma = draw(rng, 0, 1);
    for (int i = 1; i <= n_gamma; ++i) {
        s.generators.push_back({"gamma" + std::to_string(i), Parity::even, 2, GeneratorKind::plain_form, "", 0, false});
    }
    return s;
}

} // namespace

ModelSpec random_model_spec(std::uint64_t seed, const RandomModelOptions &opts)
{
    std::mt19937_64 rng(seed);
    for (int tries = 0; tries < 1000; ++tries) {
        auto s = attempt(rng, opts);
        if (!s) {
            continue;
        }
        s->name = "random-" + std::to_string(seed);
        try {
            (void)FormalModel::build(*s);
            return *s;
        } catch (const EngineError &) {
            // the truncation can make some presentations inconsistent; draw again
        }
    }
    fail(Errc::invariant_violation, "no valid random model for seed " + std::to_string(seed));
}

FormalModel random_model(std::uint64_t seed, const RandomModelOptions &opts)
{
    return FormalModel::build(random_model_spec(seed, opts));
}

RationalMatrix random_gl_plus(std::mt19937_64 &rng, int k)
{
    while (true) {
        RationalMatrix A(k, k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                A(i, j) = small_rational(rng);
            }
        }
        const Rational det = A.determinant();
        if (det == 0) {
            continue;
        }
        if (det < 0) {
            for (int j = 0; j < k; ++j) {
                A(0, j) = -A(0, j);
            }
        }
        return A;
    }
}

} // namespace equivar
