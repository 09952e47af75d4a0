#include <doctest.h>

#include <random>

#include "galetx/demos.hpp"
#include "galetx/samples.hpp"
#include "galetx/selfassoc.hpp"
#include "galetx/transform.hpp"
#include "oracle.hpp"

using namespace galetx;

namespace {

const FieldSpec Q = FieldSpec::rationals();

bool holds(const PointConfiguration& cfg, const Vector& d) {
  for (const auto& x : d)
    if (x.is_zero()) return false;
  return d.size() == cfg.size() && oracle::weighted_product_vanishes(cfg.coords(), d, cfg.coords());
}

PointConfiguration generic_sextuple() {
  return PointConfiguration::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {2, -1, 5}});
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("witnesses for the worked sextuples") {
  const PointConfiguration pascal = pascal_sextuple(Q);
  const SelfAssociation sa = self_association_witness(pascal);
  REQUIRE(sa.status == SelfAssociation::Status::Witness);
  CHECK(holds(pascal, sa.witness));
  CHECK(verify_self_association(pascal, sa.witness));
  CHECK(is_equivalent_labeled(pascal, gale_transform(pascal).transform) == Equivalence::Equivalent);

  CHECK(self_association_witness(generic_sextuple()).status == SelfAssociation::Status::NotSelfAssociated);

  const PointConfiguration bases = two_orthogonal_bases_sextuple(Q);
  const SelfAssociation sb = self_association_witness(bases);
  REQUIRE(sb.status == SelfAssociation::Status::Witness);
  CHECK(proportional(sb.witness, Vector{Scalar(Q, -9), Scalar(Q, -9), Scalar(Q, -9), Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, 1)}));

  CHECK(code_of([] { self_association_witness(PointConfiguration::from_ints(Q, {{1, 0}, {0, 1}, {1, 1}})); }) ==
        ErrorCode::WrongDegree);
}

TEST_CASE("independent verifier rejects bad witnesses") {
  const PointConfiguration pascal = pascal_sextuple(Q);
  Vector d = self_association_witness(pascal).witness;
  d[2] = d[2] * Scalar(Q, 2);
  CHECK_FALSE(verify_self_association(pascal, d));
  d = self_association_witness(pascal).witness;
  d[0] = Scalar::zero(Q);
  CHECK_FALSE(verify_self_association(pascal, d));
  CHECK_FALSE(verify_self_association(pascal, Vector(5, Scalar::one(Q))));
}

TEST_CASE("scaling invariance") {
  std::mt19937_64 rng(3);
  const PointConfiguration cfg = random_points_on_conic(Q, 6, rng);
  const Vector d = self_association_witness(cfg).witness;
  Vector lambda, scaled_d;
  for (std::size_t i = 0; i < 6; ++i) {
    lambda.push_back(Scalar(Q, static_cast<long long>(i) + 2));
    scaled_d.push_back(d[i] / (lambda[i] * lambda[i]));
  }
  const PointConfiguration scaled = scale_rows(cfg, lambda);
  CHECK(verify_self_association(scaled, scaled_d));
  CHECK(self_association_witness(scaled).status == SelfAssociation::Status::Witness);
}

TEST_CASE("arithmetically Gorenstein") {
  CHECK(is_arithmetically_gorenstein(pascal_sextuple(Q)) == Tri::True);
  CHECK(is_arithmetically_gorenstein(generic_sextuple()) == Tri::False);
  const PointConfiguration sum = direct_sum(pascal_sextuple(Q), pascal_sextuple(Q));
  CHECK(self_association_witness(sum).status == SelfAssociation::Status::Witness);
  CHECK(quadric_defect(sum) == 2);
  CHECK(is_arithmetically_gorenstein(sum) == Tri::False);
}

TEST_CASE("eight base points of a net of quadrics over GF(101)") {
  const SevenPointReport rep = demo_seven_p3(5, 101);
  REQUIRE(rep.analysis.eighth_point.has_value());
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < 7; ++i) rows.push_back(rep.points.coords().row_vector(i));
  rows.push_back(*rep.analysis.eighth_point);
  const PointConfiguration eight = PointConfiguration::from_rows(FieldSpec::prime(101), 3, rows);
  CHECK(is_arithmetically_gorenstein(eight) == Tri::True);
  const SelfAssociation sa = self_association_witness(eight);
  REQUIRE(sa.status == SelfAssociation::Status::Witness);
  CHECK(holds(eight, sa.witness));
}

TEST_CASE("generic vector search") {
  const FieldSpec f3 = FieldSpec::prime(3);
  // Span of (1,1) and (1,2) over GF(3): (1,0)+... every vector avoiding both
  // coordinate zeros exists, e.g. (1,1).
  const std::vector<Vector> basis{{Scalar(f3, 1), Scalar(f3, 1)}, {Scalar(f3, 1), Scalar(f3, 2)}};
  const std::vector<Vector> coords{{Scalar(f3, 1), Scalar(f3, 0)}, {Scalar(f3, 0), Scalar(f3, 1)}};
  const GenericSearch found = find_generic_vector(f3, 2, basis, coords);
  REQUIRE(found.status == GenericSearch::Status::Found);
  CHECK(!found.vector[0].is_zero());
  CHECK(!found.vector[1].is_zero());
  // A functional vanishing on the span makes it impossible.
  const std::vector<Vector> line{{Scalar(Q, 1), Scalar(Q, 0)}};
  const std::vector<Vector> second{{Scalar(Q, 0), Scalar(Q, 1)}};
  CHECK(find_generic_vector(Q, 2, line, second).status == GenericSearch::Status::Impossible);
  // Over GF(2) the functionals x, y, x+y cannot all be nonzero at once.
  const FieldSpec f2 = FieldSpec::prime(2);
  const std::vector<Vector> plane{{Scalar(f2, 1), Scalar(f2, 0)}, {Scalar(f2, 0), Scalar(f2, 1)}};
  const std::vector<Vector> three{{Scalar(f2, 1), Scalar(f2, 0)}, {Scalar(f2, 0), Scalar(f2, 1)}, {Scalar(f2, 1), Scalar(f2, 1)}};
  CHECK(find_generic_vector(f2, 2, plane, three).status == GenericSearch::Status::Impossible);
  CHECK(find_generic_vector(f2, 2, plane, three, 1).status == GenericSearch::Status::Indeterminate);
}

TEST_CASE("orthogonalizing form") {
  const PointConfiguration bases = two_orthogonal_bases_sextuple(Q);
  const auto form = orthogonalizing_form(bases, SubsetSelector({0, 1, 2}));
  REQUIRE(form.has_value());
  CHECK(proportional(form->diagonal, Vector(3, Scalar::one(Q))));
  CHECK(form->is_nonsingular());
  const Vector d = witness_from_form(bases, SubsetSelector({0, 1, 2}), *form);
  CHECK(holds(bases, d));

  const PointConfiguration generic = generic_sextuple();
  for_each_combination(6, 3, [&](std::span<const std::size_t> s) {
    const SubsetSelector split({s.begin(), s.end()});
    if (rank(generic.coords().select_rows(split.indices())) == 3 &&
        rank(generic.coords().select_rows(split.complement(6).indices())) == 3) {
      CHECK_FALSE(orthogonalizing_form(generic, split).has_value());
    }
    return true;
  });
  const PointConfiguration collinear =
      PointConfiguration::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}});
  CHECK(code_of([&] { orthogonalizing_form(collinear, SubsetSelector({0, 1, 2})); }) == ErrorCode::NotTwoBases);

  // Every two-bases split of a self-associated sextuple yields a form whose
  // witness passes the independent check.
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const PointConfiguration cfg = random_points_on_conic(Q, 6, rng);
    const auto split = partition_into_two_bases(cfg);
    REQUIRE(split.has_value());
    const auto b = orthogonalizing_form(cfg, split->first);
    REQUIRE(b.has_value());
    CHECK(holds(cfg, witness_from_form(cfg, split->first, *b)));
  }
}

TEST_CASE("completion") {
  const PointConfiguration five = PointConfiguration::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Completion c = complete_to_self_associated(five, seed);
    REQUIRE(c.status == Completion::Status::Completed);
    CHECK(c.added.indices() == std::vector<std::size_t>{5});
    const SelfAssociation sa = self_association_witness(*c.completed);
    REQUIRE(sa.status == SelfAssociation::Status::Witness);
    CHECK(holds(*c.completed, sa.witness));
    // The five points determine the conic; the added point lies on it.
    CHECK(quadric_defect(*c.completed) == 1);
  }

  std::mt19937_64 rng(2);
  const PointConfiguration seven = random_lgp_configuration(Q, 2, 7, rng);
  CHECK(complete_to_self_associated(seven, 1).status == Completion::Status::NotCompletable);

  const PointConfiguration bad_first =
      PointConfiguration::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 3}});
  CHECK(code_of([&] { complete_to_self_associated(bad_first, 1); }) == ErrorCode::FirstBlockNotBasis);

  // r + 2 points in P^r: d = 1, always completable.
  const PointConfiguration frame = PointConfiguration::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  const Completion cf = complete_to_self_associated(frame, 4);
  REQUIRE(cf.status == Completion::Status::Completed);
  CHECK(self_association_witness(*cf.completed).status == SelfAssociation::Status::Witness);
}

TEST_CASE("eleven points of P^6") {
  const ElevenPointReport rep = demo_eleven_p6(3, {1, 2, 3, 4, 5});
  CHECK(rep.all_self_associated);
  CHECK(rep.same_plane);
  REQUIRE(rep.added_spans.size() == 5);
  CHECK(rep.added_spans[0].rows() == 3);
}

TEST_CASE("direct sums") {
  std::mt19937_64 rng(8);
  const PointConfiguration a = random_points_on_conic(Q, 6, rng);
  const PointConfiguration b = random_points_on_conic(Q, 6, rng);
  const DirectSumReport both = direct_sum_self_association_check(a, b);
  CHECK(both.sum == SelfAssociation::Status::Witness);
  CHECK(both.sum_defect == 2);
  CHECK(both.consistent);
  const DirectSumReport mixed = direct_sum_self_association_check(a, generic_sextuple());
  CHECK(mixed.sum == SelfAssociation::Status::NotSelfAssociated);
  CHECK(mixed.consistent);
  const PointConfiguration p1a = PointConfiguration::from_ints(Q, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  const PointConfiguration p1b = PointConfiguration::from_ints(Q, {{1, 3}, {1, -1}, {2, 1}, {0, 1}});
  const DirectSumReport lines = direct_sum_self_association_check(p1a, p1b);
  CHECK(lines.first == SelfAssociation::Status::Witness);
  CHECK(lines.sum == SelfAssociation::Status::Witness);
  CHECK(lines.consistent);
  CHECK(code_of([&] { direct_sum_self_association_check(p1a, PointConfiguration::from_ints(Q, {{1, 0}, {0, 1}, {1, 1}})); }) ==
        ErrorCode::WrongDegree);
}

TEST_CASE("self-association over a prime field") {
  const FieldSpec f = FieldSpec::prime(101);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const PointConfiguration cfg = random_points_on_conic(f, 6, rng);
    if (!is_linearly_general_position(cfg)) continue;
    const SelfAssociation sa = self_association_witness(cfg);
    REQUIRE(sa.status == SelfAssociation::Status::Witness);
    CHECK(holds(cfg, sa.witness));
  }
}
