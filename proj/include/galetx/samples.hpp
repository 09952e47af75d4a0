#pragma once

// Seeded generators for random configurations used by the demos, the CLI and
// the test suites.

#include <cstddef>
#include <random>

#include "galetx/curves.hpp"
#include "galetx/pointconfig.hpp"

namespace galetx {

// Over Q: integers in [-bound, bound]; over GF(p): uniform residues.
Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng, long long bound = 9);
Vector random_nonzero_vector(const FieldSpec& field, std::size_t n, std::mt19937_64& rng,
                             long long bound = 9);
ExactMatrix random_invertible(const FieldSpec& field, std::size_t n, std::mt19937_64& rng,
                              long long bound = 9);

// gamma distinct random points of P^r (no other condition).
PointConfiguration random_configuration(const FieldSpec& field, std::size_t r, std::size_t gamma,
                                        std::mt19937_64& rng, long long bound = 9);
// Retries until the points are in linearly general position.
PointConfiguration random_lgp_configuration(const FieldSpec& field, std::size_t r,
                                            std::size_t gamma, std::mt19937_64& rng,
                                            long long bound = 9);
// gamma points on M * (a^2, ab, b^2) for random invertible M and distinct
// random parameters.
PointConfiguration random_points_on_conic(const FieldSpec& field, std::size_t gamma,
                                          std::mt19937_64& rng);

}  // namespace galetx
