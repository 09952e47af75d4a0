#include "galetx/curves.hpp"

#include <algorithm>
#include <set>

#include "galetx/transform.hpp"

namespace galetx {

ParameterList::ParameterList(const FieldSpec& field, std::vector<Vector> params)
    : field_(field), params_(std::move(params)) {
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (params_[i].size() != 2) throw Error(ErrorCode::DimensionMismatch, "parameters are pairs (a : b)");
    if (is_zero_vector(params_[i])) throw Error(ErrorCode::ZeroPoint, "parameter " + std::to_string(i) + " is (0 : 0)", {i});
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(params_[i], params_[j])) {
        throw Error(ErrorCode::DuplicatePoint,
                    "parameters " + std::to_string(j) + " and " + std::to_string(i) + " coincide", {j, i});
      }
    }
  }
}

ParameterList ParameterList::affine(const FieldSpec& field, const std::vector<long long>& values) {
  std::vector<Vector> params;
  for (auto t : values) params.push_back({Scalar::one(field), Scalar(field, t)});
  return ParameterList(field, std::move(params));
}

Vector moment_point(std::span<const Scalar> ab, std::size_t e) {
  Vector out;
  out.reserve(e + 1);
  for (std::size_t k = 0; k <= e; ++k) {
    out.push_back(ab[0].pow(static_cast<unsigned>(e - k)) * ab[1].pow(static_cast<unsigned>(k)));
  }
  return out;
}

PointConfiguration rnc_embed(const ParameterList& params, std::size_t e) {
  if (e < 1) throw Error(ErrorCode::DegreeOutOfRange, "embedding degree must be at least 1");
  std::vector<Vector> rows;
  for (const auto& t : params.params()) rows.push_back(moment_point(t, e));
  return PointConfiguration::from_rows(params.field(), e, rows);
}

Vector RncParametrization::at(std::span<const Scalar> ab) const {
  const Vector q = moment_point(ab, r);
  return multiply(q, matrix.transpose());
}

bool is_moment_vector(std::span<const Scalar> v) {
  // 2x2 minors of [[v0 .. v_{r-1}], [v1 .. v_r]].
  const std::size_t r = v.size() - 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (!(v[i] * v[j + 1] == v[j] * v[i + 1])) return false;
    }
  }
  return true;
}

bool rnc_contains(const RncParametrization& curve, std::span<const Scalar> p) {
  if (p.size() != curve.r + 1) throw Error(ErrorCode::DimensionMismatch, "point length mismatch");
  if (is_zero_vector(p)) throw Error(ErrorCode::ZeroPoint, "zero point");
  const auto inv = inverse(curve.matrix);
  if (!inv) throw Error(ErrorCode::VerificationFailed, "curve matrix is singular");
  return is_moment_vector(multiply(p, inv->transpose()));
}

RncParametrization fit_rational_normal_curve(const PointConfiguration& cfg, std::size_t held_out) {
  const std::size_t r = cfg.dim();
  const std::size_t r1 = r + 1;
  if (cfg.size() != r + 3) {
    throw Error(ErrorCode::DimensionMismatch, "curve fitting needs exactly r+3 points");
  }
  if (held_out >= cfg.size()) throw Error(ErrorCode::InvalidSubset, "held-out index out of range");
  if (!is_linearly_general_position(cfg)) {
    throw Error(ErrorCode::NotLGP, "points are not in linearly general position");
  }
  const FieldSpec& field = cfg.field();
  const GaleResult gale = gale_transform(cfg);

  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < cfg.size(); ++i)
    if (i != held_out) used.push_back(i);

  // Unknowns: M row-major ((r+1)^2 entries), then one lambda per used point.
  // Equations: (M q_i)_a - lambda_i p_{i,a} = 0.
  const std::size_t n_m = r1 * r1;
  ExactMatrix system(field, used.size() * r1, n_m + used.size());
  for (std::size_t k = 0; k < used.size(); ++k) {
    const std::size_t i = used[k];
    const Vector q = moment_point(gale.transform.point(i), r);
    for (std::size_t a = 0; a < r1; ++a) {
      const std::size_t row = k * r1 + a;
      for (std::size_t b = 0; b < r1; ++b) system(row, a * r1 + b) = q[b];
      system(row, n_m + k) = -cfg.coords()(i, a);
    }
  }
  const ExactMatrix kernel = kernel_basis(system);
  if (kernel.cols() != 1) {
    throw Error(ErrorCode::VerificationFailed,
                "curve system has a " + std::to_string(kernel.cols()) + "-dimensional solution space");
  }
  ExactMatrix m(field, r1, r1);
  for (std::size_t a = 0; a < r1; ++a)
    for (std::size_t b = 0; b < r1; ++b) m(a, b) = kernel(a * r1 + b, 0);
  if (determinant(m).is_zero()) throw Error(ErrorCode::VerificationFailed, "fitted matrix is singular");

  RncParametrization curve{r, std::move(m)};
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (!proportional(curve.at(gale.transform.point(i)), cfg.point(i))) {
      throw Error(ErrorCode::VerificationFailed,
                  "point " + std::to_string(i) + " is not the image of its Gale parameter", {i});
    }
  }
  return curve;
}

RncParametrization fit_rational_normal_curve(const PointConfiguration& cfg) {
  return fit_rational_normal_curve(cfg, cfg.size() - 1);
}

GoppaReport goppa_dual_check(const ParameterList& params, std::size_t h) {
  const std::size_t n = params.size();
  if (h < 1 || h + 3 > n) {
    throw Error(ErrorCode::DegreeOutOfRange,
                "need 1 <= h <= n-3, got h=" + std::to_string(h) + ", n=" + std::to_string(n));
  }
  GoppaReport rep{n, h, n - h - 2, Equivalence::Indeterminate, std::nullopt, std::nullopt};
  const GaleResult gale = gale_transform(rnc_embed(params, h));
  const PointConfiguration dual = rnc_embed(params, rep.dual_degree);
  rep.equivalence = is_equivalent_labeled(gale.transform, dual);
  rep.gale_canonical = canonical_form(gale.transform);
  rep.dual_canonical = canonical_form(dual);
  return rep;
}

ParameterList random_parameters(const FieldSpec& field, std::size_t n, std::mt19937_64& rng,
                                long long bound) {
  std::vector<Vector> params;
  if (field.is_rational()) {
    if (static_cast<long long>(n) > 2 * bound + 1) throw Error(ErrorCode::TooManyPoints, "bound too small");
    std::set<long long> seen;
    std::uniform_int_distribution<long long> dist(-bound, bound);
    while (params.size() < n) {
      const long long t = dist(rng);
      if (!seen.insert(t).second) continue;
      params.push_back({Scalar::one(field), Scalar(field, t)});
    }
  } else {
    const auto p = static_cast<long long>(field.modulus());
    if (static_cast<long long>(n) > p + 1) throw Error(ErrorCode::TooManyPoints, "more parameters than P^1(F_p) points");
    std::set<long long> seen;
    // Value p stands for the point at infinity (0 : 1).
    std::uniform_int_distribution<long long> dist(0, p);
    while (params.size() < n) {
      const long long t = dist(rng);
      if (!seen.insert(t).second) continue;
      if (t == p) {
        params.push_back({Scalar::zero(field), Scalar::one(field)});
      } else {
        params.push_back({Scalar::one(field), Scalar(field, t)});
      }
    }
  }
  return ParameterList(field, std::move(params));
}

}  // namespace galetx
