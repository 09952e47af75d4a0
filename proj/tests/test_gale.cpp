#include <doctest.h>

#include <algorithm>
#include <random>

#include "galetx/samples.hpp"
#include "galetx/transform.hpp"
#include "oracle.hpp"

using namespace galetx;

namespace {

const FieldSpec Q = FieldSpec::rationals();

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

const PointConfiguration four_collinear() {
  return PointConfiguration::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {0, 0, 1}, {1, 3, 1}});
}

}  // namespace

TEST_CASE("four points of P^1") {
  const PointConfiguration cfg = PointConfiguration::from_ints(Q, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  const GaleResult g = gale_transform(cfg);
  CHECK(g.transform.dim() == 1);
  CHECK(oracle::product_vanishes(cfg.coords(), g.transform.coords()));
  CHECK(verify_gale_pair(cfg, g.transform, g.witness));
  const PointConfiguration expected = PointConfiguration::from_ints(Q, {{1, 1}, {1, 2}, {1, 0}, {0, 1}});
  CHECK(is_equivalent_labeled(g.transform, expected) == Equivalence::Equivalent);
}

TEST_CASE("transform preconditions") {
  const PointConfiguration frame = PointConfiguration::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(code_of([&] { gale_transform(frame); }) == ErrorCode::DimensionMismatch);
  const PointConfiguration five_collinear =
      PointConfiguration::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {0, 0, 1}});
  try {
    gale_transform(five_collinear);
    FAIL("accepted five collinear points");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GaleDegenerate);
    CHECK(e.indices() == std::vector<std::size_t>{5});
  }
  CHECK(code_of([] { gale_transform(four_collinear()); }) == ErrorCode::GaleNonReduced);
  const PointConfiguration planar =
      PointConfiguration::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}});
  CHECK(code_of([&] { gale_transform(planar); }) == ErrorCode::Degenerate);
}

TEST_CASE("basepoint-free and very ample") {
  std::mt19937_64 rng(1);
  const PointConfiguration lgp = random_lgp_configuration(Q, 2, 7, rng);
  CHECK(gale_is_basepoint_free(lgp));
  CHECK(gale_is_very_ample(lgp));
  const PointConfiguration five_collinear =
      PointConfiguration::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {0, 0, 1}});
  CHECK_FALSE(gale_is_basepoint_free(five_collinear));
  CHECK(gale_is_basepoint_free(four_collinear()));
  CHECK_FALSE(gale_is_very_ample(four_collinear()));
}

TEST_CASE("duality defects") {
  const PointConfiguration cfg = four_collinear();
  const DualityDefects all = duality_defects(cfg, SubsetSelector::all(6));
  CHECK(all.span_failure == 0);
  CHECK(all.condition_failure == 0);
  const DualityDefects line = duality_defects(cfg, SubsetSelector({0, 1, 2, 3}));
  CHECK(line.span_failure == 1);
  CHECK(line.condition_failure == 1);

  std::mt19937_64 rng(5);
  const PointConfiguration lgp = random_lgp_configuration(Q, 3, 8, rng);
  const GaleResult g = gale_transform(lgp);
  for_each_combination(8, 4, [&](std::span<const std::size_t> s) {
    const DualityDefects d = duality_defects(g, SubsetSelector({s.begin(), s.end()}));
    CHECK(d.span_failure == 0);
    CHECK(d.condition_failure == 0);
    return true;
  });

  // Rank form of the identity on random configurations with dependencies.
  for (int trial = 0; trial < 10; ++trial) {
    const PointConfiguration c = random_configuration(trial % 2 ? FieldSpec::prime(11) : Q, 2, 7, rng, 2);
    if (!is_nondegenerate(c)) continue;
    const ExactMatrix k = gale_matrix(c);
    for (std::uint64_t mask = 0; mask < 128; ++mask) {
      std::vector<std::size_t> in, out;
      for (std::size_t i = 0; i < 7; ++i) (mask >> i & 1 ? in : out).push_back(i);
      const DualityDefects d = duality_defects(c, SubsetSelector(in));
      CHECK(d.span_failure == d.condition_failure);
      CHECK(oracle::rank_of_rows(c.coords(), in) + oracle::rank_of_rows(k, out) ==
            out.size() + 3 - 2 * d.span_failure);
    }
  }
}

TEST_CASE("involution, permutation and scaling") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldSpec f = trial % 2 ? FieldSpec::prime(101) : Q;
    const std::size_t r = 1 + trial % 4;
    const PointConfiguration cfg = random_lgp_configuration(f, r, r + 3 + trial % 3, rng);
    const GaleResult g = gale_transform(cfg);
    CHECK(is_equivalent_labeled(gale_transform(g.transform).transform, cfg) == Equivalence::Equivalent);

    std::vector<std::size_t> perm(cfg.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(is_equivalent_labeled(gale_transform(permute(cfg, perm)).transform, permute(g.transform, perm)) ==
          Equivalence::Equivalent);

    Vector scales;
    for (std::size_t i = 0; i < cfg.size(); ++i) scales.push_back(Scalar(f, static_cast<long long>(i) + 2));
    CHECK(is_equivalent_labeled(gale_transform(scale_rows(cfg, scales)).transform, g.transform) ==
          Equivalence::Equivalent);
  }
}

TEST_CASE("verify_gale_pair rejects wrong pairs") {
  const PointConfiguration cfg = PointConfiguration::from_ints(Q, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  const GaleResult g = gale_transform(cfg);
  Vector d = g.witness;
  CHECK(verify_gale_pair(cfg, g.transform, d));
  d[0] = Scalar(Q, 2);
  CHECK_FALSE(verify_gale_pair(cfg, g.transform, d));
  d[0] = Scalar(Q, 0);
  CHECK_FALSE(verify_gale_pair(cfg, g.transform, d));
}
