#include "galetx/demos.hpp"

#include <random>

#include "galetx/curves.hpp"
#include "galetx/samples.hpp"
#include "galetx/transform.hpp"

namespace galetx {

PointConfiguration pascal_sextuple(const FieldSpec& field) {
  return PointConfiguration::from_ints(
      field, {{1, 0, 0}, {1, 1, 1}, {1, 2, 4}, {1, 3, 9}, {1, 4, 16}, {0, 0, 1}});
}

PointConfiguration two_orthogonal_bases_sextuple(const FieldSpec& field) {
  return PointConfiguration::from_ints(
      field, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 2}, {2, 1, -2}, {2, -2, 1}});
}

PascalReport demo_pascal(const FieldSpec& field) {
  PointConfiguration cfg = pascal_sextuple(field);
  SelfAssociation sa = self_association_witness(cfg);
  const bool verified =
      sa.status == SelfAssociation::Status::Witness && verify_self_association(cfg, sa.witness);
  const std::size_t defect = quadric_defect(cfg);
  const Tri ag = is_arithmetically_gorenstein(cfg);
  const Equivalence eq = is_equivalent_labeled(cfg, gale_transform(cfg).transform);
  return {std::move(cfg), std::move(sa), verified, defect, ag, eq};
}

const char* to_string(SevenPointAnalysis::Kind k) {
  switch (k) {
    case SevenPointAnalysis::Kind::CompleteIntersection: return "complete-intersection";
    case SevenPointAnalysis::Kind::CurveBaseLocus: return "curve-base-locus";
    case SevenPointAnalysis::Kind::Degenerate: return "degenerate";
  }
  return "?";
}

SevenPointAnalysis analyze_seven_points(const PointConfiguration& cfg) {
  if (cfg.size() != 7 || cfg.dim() != 3 || !cfg.field().is_prime()) {
    throw Error(ErrorCode::DimensionMismatch, "expected seven points of P^3 over a prime field");
  }
  const FieldSpec& field = cfg.field();
  const std::uint64_t p = field.modulus();
  // Quadrics through the points: relations among the columns of the degree-2
  // evaluation matrix.
  const ExactMatrix quadrics = kernel_basis(veronese(cfg, 2).coords());
  const auto monomials = monomial_exponents(4, 2);
  std::vector<std::vector<std::uint64_t>> q(quadrics.cols(), std::vector<std::uint64_t>(monomials.size()));
  for (std::size_t c = 0; c < quadrics.cols(); ++c)
    for (std::size_t k = 0; k < monomials.size(); ++k) q[c][k] = quadrics(k, c).residue();

  std::vector<std::array<std::uint64_t, 4>> zeros;
  std::array<std::uint64_t, 4> x{};
  std::vector<std::uint64_t> mono(monomials.size());
  for (std::size_t lead = 0; lead < 4; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < 4; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      x.fill(0);
      x[lead] = 1;
      std::uint64_t rest = code;
      for (std::size_t i = 4; i-- > lead + 1;) {
        x[i] = rest % p;
        rest /= p;
      }
      for (std::size_t k = 0; k < monomials.size(); ++k) {
        std::uint64_t v = 1;
        for (std::size_t i = 0; i < 4; ++i)
          for (unsigned e = 0; e < monomials[k][i]; ++e) v = v * x[i] % p;
        mono[k] = v;
      }
      bool common = true;
      for (const auto& coeffs : q) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) acc = (acc + coeffs[k] * mono[k]) % p;
        if (acc) {
          common = false;
          break;
        }
      }
      if (common) zeros.push_back(x);
    }
  }

  SevenPointAnalysis out{SevenPointAnalysis::Kind::Degenerate, zeros.size(), std::nullopt, std::nullopt};
  if (zeros.size() > 8) {
    out.kind = SevenPointAnalysis::Kind::CurveBaseLocus;
    return out;
  }
  if (quadrics.cols() != 3 || zeros.size() != 8) return out;
  std::vector<Vector> extra;
  for (const auto& z : zeros) {
    Vector v;
    for (auto c : z) v.push_back(Scalar(field, static_cast<long long>(c)));
    bool known = false;
    for (std::size_t i = 0; i < cfg.size(); ++i) known = known || proportional(v, cfg.point(i));
    if (!known) extra.push_back(std::move(v));
  }
  if (extra.size() != 1) return out;
  out.eighth_point = extra[0];

  // Linear functionals vanishing on the eighth point give the projection.
  const ExactMatrix projector = kernel_basis(ExactMatrix::from_rows(field, 4, {extra[0]}));
  try {
    out.projection = PointConfiguration(field, 2, cfg.coords() * projector);
    const GaleResult gale = gale_transform(cfg);
    out.equivalence = is_equivalent_labeled(*out.projection, gale.transform);
    out.kind = SevenPointAnalysis::Kind::CompleteIntersection;
  } catch (const Error&) {
    out.projection.reset();
  }
  return out;
}

SevenPointReport demo_seven_p3(std::uint64_t seed, std::uint64_t p, std::size_t retries) {
  if (p < 101) throw Error(ErrorCode::InvalidField, "the seven-point demo needs p >= 101");
  const FieldSpec field = FieldSpec::prime(p);
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= retries; ++attempt) {
    PointConfiguration cfg = random_lgp_configuration(field, 3, 7, rng);
    SevenPointAnalysis analysis = analyze_seven_points(cfg);
    if (analysis.kind == SevenPointAnalysis::Kind::CompleteIntersection) {
      return {seed, p, attempt, std::move(cfg), std::move(analysis)};
    }
  }
  throw Error(ErrorCode::RetryBudgetExceeded, "no sample with eight rational base points");
}

SevenPointReport demo_seven_p3_on_twisted_cubic(std::uint64_t seed, std::uint64_t p) {
  const FieldSpec field = FieldSpec::prime(p);
  std::mt19937_64 rng(seed);
  const ParameterList params = random_parameters(field, 7, rng);
  PointConfiguration cfg = transform_coordinates(rnc_embed(params, 3), random_invertible(field, 4, rng));
  SevenPointAnalysis analysis = analyze_seven_points(cfg);
  return {seed, p, 1, std::move(cfg), std::move(analysis)};
}

ElevenPointReport demo_eleven_p6(std::uint64_t seed, const std::vector<std::uint64_t>& completion_seeds) {
  std::mt19937_64 rng(seed);
  const FieldSpec field = FieldSpec::rationals();
  PointConfiguration cfg = random_lgp_configuration(field, 6, 11, rng);
  ElevenPointReport rep{cfg, {}, {}, true, true};
  for (auto s : completion_seeds) {
    Completion c = complete_to_self_associated(cfg, s);
    if (c.status != Completion::Status::Completed) {
      rep.all_self_associated = false;
      rep.same_plane = false;
      rep.completions.push_back(std::move(c));
      continue;
    }
    const auto sa = self_association_witness(*c.completed);
    if (sa.status != SelfAssociation::Status::Witness || !verify_self_association(*c.completed, sa.witness)) {
      rep.all_self_associated = false;
    }
    ExactMatrix added = c.completed->coords().select_rows(c.added.indices());
    const RrefResult rr = rref(added);
    ExactMatrix span = rr.reduced.select_rows(SubsetSelector::range(0, rr.rank).indices());
    if (!rep.added_spans.empty() && !(span == rep.added_spans.front())) rep.same_plane = false;
    rep.added_spans.push_back(std::move(span));
    rep.completions.push_back(std::move(c));
  }
  return rep;
}

}  // namespace galetx
