#pragma once

// Rational normal curves: moment-curve embeddings of P^1, fitting a curve
// through r+3 points of P^r, membership, and the P^1 case of Goppa duality.

#include <cstddef>
#include <random>
#include <vector>

#include "galetx/pointconfig.hpp"

namespace galetx {

// Distinct points (a : b) of P^1.
class ParameterList {
 public:
  // Throws ZeroPoint / DuplicatePoint.
  ParameterList(const FieldSpec& field, std::vector<Vector> params);
  static ParameterList affine(const FieldSpec& field, const std::vector<long long>& values);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return params_.size(); }
  const Vector& operator[](std::size_t i) const { return params_[i]; }
  const std::vector<Vector>& params() const noexcept { return params_; }

 private:
  FieldSpec field_;
  std::vector<Vector> params_;
};

// nu_e(a : b) = (a^e, a^{e-1} b, ..., b^e).
Vector moment_point(std::span<const Scalar> ab, std::size_t e);
PointConfiguration rnc_embed(const ParameterList& params, std::size_t e);

// t -> M * nu_r(t), M invertible.
struct RncParametrization {
  std::size_t r;
  ExactMatrix matrix;

  Vector at(std::span<const Scalar> ab) const;
};

// gamma = r + 3 points in linearly general position. The Gale transform gives
// parameters t_i in P^1; M is solved from r + 2 of the points and checked on
// the held-out one. Throws NotLGP and VerificationFailed.
RncParametrization fit_rational_normal_curve(const PointConfiguration& cfg,
                                             std::size_t held_out);
RncParametrization fit_rational_normal_curve(const PointConfiguration& cfg);

// Catalecticant test on M^-1 p.
bool rnc_contains(const RncParametrization& curve, std::span<const Scalar> p);
bool is_moment_vector(std::span<const Scalar> v);

struct GoppaReport {
  std::size_t n;
  std::size_t h;
  std::size_t dual_degree;
  Equivalence equivalence;
  std::optional<PointConfiguration> gale_canonical;
  std::optional<PointConfiguration> dual_canonical;
  bool passed() const { return equivalence == Equivalence::Equivalent; }
};

// Gale transform of the degree-h embedding against the degree-(n-h-2)
// embedding of the same parameters. Requires 1 <= h <= n-3 (DegreeOutOfRange).
GoppaReport goppa_dual_check(const ParameterList& params, std::size_t h);

// Distinct random parameters; over Q they are affine integers in
// [-bound, bound], over GF(p) drawn from P^1(F_p).
ParameterList random_parameters(const FieldSpec& field, std::size_t n, std::mt19937_64& rng,
                                long long bound = 50);

}  // namespace galetx
