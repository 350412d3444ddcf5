#pragma once

#include <cstdint>
#include <random>

#include <equivar/formal_model.hpp>

namespace equivar {

struct RandomModelOptions {
    int max_rank = 3;
    int max_parameters = 3;
    int max_dim = 6;
};

/// Uniform integer in [lo, hi]; unlike std::uniform_int_distribution the
/// sequence is the same on every standard library.
int draw(std::mt19937_64 &rng, int lo, int hi);

/// A frame with constant rank-k moment, optional d alpha symbols and a few
/// closed forms. Every spec returned here passes FormalModel::build.
ModelSpec random_model_spec(std::uint64_t seed, const RandomModelOptions &opts = {});
FormalModel random_model(std::uint64_t seed, const RandomModelOptions &opts = {});

/// Random k x k rational matrix with det > 0.
RationalMatrix random_gl_plus(std::mt19937_64 &rng, int k);

} // namespace equivar
