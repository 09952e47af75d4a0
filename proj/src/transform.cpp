#include "galetx/transform.hpp"

namespace galetx {

ExactMatrix gale_matrix(const PointConfiguration& cfg) {
  const std::size_t gamma = cfg.size();
  const std::size_t r = cfg.dim();
  if (gamma < r + 3) {
    throw Error(ErrorCode::DimensionMismatch,
                "Gale transform needs at least r+3 = " + std::to_string(r + 3) + " points, got " +
                    std::to_string(gamma));
  }
  if (!is_nondegenerate(cfg)) throw Error(ErrorCode::Degenerate, "points do not span P^" + std::to_string(r));
  return kernel_basis(cfg.coords().transpose());
}

GaleResult gale_transform(const PointConfiguration& cfg) {
  const std::size_t gamma = cfg.size();
  const ExactMatrix kernel = gale_matrix(cfg);
  for (std::size_t i = 0; i < gamma; ++i) {
    if (is_zero_vector(kernel.row(i))) {
      throw Error(ErrorCode::GaleDegenerate,
                  "a hyperplane contains every point except " + std::to_string(i), {i});
    }
  }
  for (std::size_t i = 0; i < gamma; ++i) {
    for (std::size_t j = i + 1; j < gamma; ++j) {
      if (proportional(kernel.row(i), kernel.row(j))) {
        throw Error(ErrorCode::GaleNonReduced,
                    "a hyperplane contains every point except " + std::to_string(i) + " and " +
                        std::to_string(j),
                    {i, j});
      }
    }
  }
  const std::size_t s = kernel.cols() - 1;
  Vector ones(gamma, Scalar::one(cfg.field()));
  return GaleResult{cfg, PointConfiguration(cfg.field(), s, kernel), std::move(ones)};
}

bool verify_gale_pair(const PointConfiguration& g, const PointConfiguration& g_prime,
                      std::span<const Scalar> d) {
  if (g.size() != g_prime.size() || d.size() != g.size()) return false;
  const ExactMatrix product =
      g.coords().transpose() * ExactMatrix::diagonal(g.field(), d) * g_prime.coords();
  return product.is_zero();
}

namespace {

bool every_cosubset_spans(const PointConfiguration& cfg, std::size_t dropped) {
  if (dropped > cfg.size()) return false;
  const std::size_t r1 = cfg.dim() + 1;
  return for_each_combination(cfg.size(), cfg.size() - dropped, [&](std::span<const std::size_t> s) {
    return rank(cfg.coords().select_rows(s)) == r1;
  });
}

}  // namespace

bool gale_is_basepoint_free(const PointConfiguration& cfg) { return every_cosubset_spans(cfg, 1); }
bool gale_is_very_ample(const PointConfiguration& cfg) { return every_cosubset_spans(cfg, 2); }

DualityDefects duality_defects(const GaleResult& gale, const SubsetSelector& s) {
  const auto& cfg = gale.source;
  s.validate(cfg.size());
  const SubsetSelector rest = s.complement(cfg.size());
  const std::size_t span_failure = cfg.dim() + 1 - span_rank(cfg, s);
  const std::size_t condition_failure = rest.size() - span_rank(gale.transform, rest);
  return {span_failure, condition_failure};
}

DualityDefects duality_defects(const PointConfiguration& cfg, const SubsetSelector& s) {
  s.validate(cfg.size());
  const ExactMatrix kernel = gale_matrix(cfg);
  const SubsetSelector rest = s.complement(cfg.size());
  const std::size_t span_failure = cfg.dim() + 1 - span_rank(cfg, s);
  const std::size_t image_rank = rest.empty() ? 0 : rank(kernel.select_rows(rest.indices()));
  return {span_failure, rest.size() - image_rank};
}

}  // namespace galetx
