#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>

#include <equivar/formal_model.hpp>
#include <equivar/linalg.hpp>

namespace gen {

inline constexpr std::uint64_t seed = 0x5eed2024;

int uniform(std::mt19937_64 &rng, int lo, int hi);
equivar::Rational small_rational(std::mt19937_64 &rng);

/// Sum of up to `terms` products of random generators, parameters and at
/// most one delta factor, all multiplied out through the engine.
equivar::Element element(std::mt19937_64 &rng, const equivar::FormalModel &m, int terms = 4, bool deltas = true);

/// Random invertible k x k matrix; det > 0 when `positive`.
equivar::RationalMatrix invertible(std::mt19937_64 &rng, int k, bool positive);

} // namespace gen
