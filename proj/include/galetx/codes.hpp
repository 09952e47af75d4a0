#pragma once

// Linear codes over prime fields, their duals, and generalized Reed-Solomon
// codes.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "galetx/curves.hpp"
#include "galetx/exactla.hpp"

namespace galetx {

class LinearCode {
 public:
  // Requires a prime field and a k x n generator of rank k with 1 <= k < n.
  explicit LinearCode(ExactMatrix generator);

  const FieldSpec& field() const noexcept { return generator_.field(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const ExactMatrix& generator() const noexcept { return generator_; }

 private:
  ExactMatrix generator_;
};

struct GrsSpec {
  // Evaluation points (a : b) of P^1(F_p); (0 : 1) is the point at infinity.
  ParameterList points;
  Vector multipliers;
  std::size_t k;
};

// Row i, column j: multiplier_j * a_j^{k-1-i} b_j^i. Throws TooManyPoints when
// n > p + 1.
LinearCode grs_code(const GrsSpec& spec);

LinearCode dual_code(const LinearCode& c);

// Row spaces coincide. Throws ShapeMismatch on different field or length.
bool same_code(const LinearCode& a, const LinearCode& b);

// Multipliers m' with dual(GRS(points, m, k)) = GRS(points, m', n - k).
Vector grs_dual_multipliers(const GrsSpec& spec);

// Closed form for affine points (1 : x_j): m'_j = 1 / (m_j prod_{l != j}(x_j - x_l)).
Vector grs_dual_multipliers_closed_form(const GrsSpec& spec);

inline constexpr std::uint64_t kMinDistanceBound = 10'000'000;

// Exhaustive over all p^k messages; throws TooLarge above kMinDistanceBound.
std::size_t min_distance(const LinearCode& c);

}  // namespace galetx
