#include "galetx/samples.hpp"

namespace galetx {

Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng, long long bound) {
  if (field.is_rational()) {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    return Scalar(field, dist(rng));
  }
  std::uniform_int_distribution<long long> dist(0, static_cast<long long>(field.modulus()) - 1);
  return Scalar(field, dist(rng));
}

Vector random_nonzero_vector(const FieldSpec& field, std::size_t n, std::mt19937_64& rng, long long bound) {
  while (true) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(field, rng, bound));
    if (!is_zero_vector(v)) return v;
  }
}

ExactMatrix random_invertible(const FieldSpec& field, std::size_t n, std::mt19937_64& rng, long long bound) {
  while (true) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(field, rng, bound);
    if (!determinant(m).is_zero()) return m;
  }
}

PointConfiguration random_configuration(const FieldSpec& field, std::size_t r, std::size_t gamma,
                                        std::mt19937_64& rng, long long bound) {
  if (field.is_prime()) {
    // |P^r(F_p)| = 1 + p + ... + p^r, capped once it exceeds gamma.
    std::uint64_t available = 0, power = 1;
    for (std::size_t i = 0; i <= r && available < gamma; ++i, power *= field.modulus()) available += power;
    if (available < gamma) {
      throw Error(ErrorCode::TooManyPoints, "P^" + std::to_string(r) + " over " + field.to_string() +
                                                " has fewer than " + std::to_string(gamma) + " points");
    }
  }
  std::vector<Vector> rows;
  std::size_t misses = 0;
  while (rows.size() < gamma) {
    Vector v = random_nonzero_vector(field, r + 1, rng, bound);
    bool duplicate = false;
    for (const auto& w : rows) duplicate = duplicate || proportional(v, w);
    if (!duplicate) {
      rows.push_back(std::move(v));
      misses = 0;
    } else if (++misses == 10'000) {
      throw Error(ErrorCode::TooManyPoints, "coordinate bound too small for " + std::to_string(gamma) +
                                                " distinct points");
    }
  }
  return PointConfiguration::from_rows(field, r, rows);
}

PointConfiguration random_lgp_configuration(const FieldSpec& field, std::size_t r, std::size_t gamma,
                                            std::mt19937_64& rng, long long bound) {
  while (true) {
    PointConfiguration cfg = random_configuration(field, r, gamma, rng, bound);
    if (is_linearly_general_position(cfg)) return cfg;
  }
}

PointConfiguration random_points_on_conic(const FieldSpec& field, std::size_t gamma, std::mt19937_64& rng) {
  const ParameterList params = random_parameters(field, gamma, rng, 20);
  const ExactMatrix m = random_invertible(field, 3, rng, 5);
  return transform_coordinates(rnc_embed(params, 2), m);
}

}  // namespace galetx
