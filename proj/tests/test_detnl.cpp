#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "galetx/detnl.hpp"

using namespace galetx;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

Vector vec(const FieldSpec& f, std::vector<long long> xs) {
  Vector v;
  for (long long x : xs) v.push_back(Scalar(f, x));
  return v;
}

}  // namespace

TEST_CASE("adjoint evaluation") {
  const FieldSpec f = FieldSpec::prime(11);
  std::mt19937_64 rng(3);
  const TrilinearForm phi = random_tensor(f, 2, 3, rng);
  const Vector x = vec(f, {1, 4, 7});
  const Vector y = vec(f, {2, 0, 5, 9});
  const ExactMatrix av = adjoint_eval(phi, Side::V, x);
  const ExactMatrix aw = adjoint_eval(phi, Side::W, y);
  CHECK(av.rows() == 4);
  CHECK(av.cols() == 5);
  CHECK(aw.rows() == 3);
  CHECK(aw.cols() == 5);
  for (std::size_t m = 0; m < phi.f(); ++m) {
    for (std::size_t j = 0; j < 4; ++j) {
      Scalar acc = Scalar::zero(f);
      for (std::size_t a = 0; a < 3; ++a) acc += phi.at(m, a, j) * x[a];
      CHECK(av(j, m) == acc);
    }
    for (std::size_t a = 0; a < 3; ++a) {
      Scalar acc = Scalar::zero(f);
      for (std::size_t j = 0; j < 4; ++j) acc += phi.at(m, a, j) * y[j];
      CHECK(aw(a, m) == acc);
    }
  }
  // Linear in the point.
  const Vector x2 = vec(f, {3, 3, 1});
  Vector sum;
  for (std::size_t a = 0; a < 3; ++a) sum.push_back(x[a] + x2[a]);
  CHECK(adjoint_eval(phi, Side::V, sum) == av + adjoint_eval(phi, Side::V, x2));
  CHECK(code_of([&] { adjoint_eval(phi, Side::V, y); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("tensor construction and round trip") {
  CHECK(code_of([] { TrilinearForm(FieldSpec::rationals(), 2, 2); }) == ErrorCode::InvalidField);
  CHECK(code_of([] { TrilinearForm(FieldSpec::prime(5), 0, 2); }) == ErrorCode::DimensionMismatch);
  std::mt19937_64 rng(8);
  const TrilinearForm phi = random_tensor(FieldSpec::prime(13), 2, 3, rng);
  CHECK(TrilinearForm::parse(phi.serialize()) == phi);
  CHECK(phi.transposed().transposed() == phi);
  CHECK(phi.transposed().at(1, 3, 2) == phi.at(1, 2, 3));
  CHECK(code_of([] { TrilinearForm::parse("nonsense"); }) == ErrorCode::ParseError);
}

TEST_CASE("loci on the line") {
  // r = s = 1: the adjoint is 2 x 2, its determinant a binary quadratic.
  const FieldSpec f = FieldSpec::prime(7);
  TrilinearForm phi(f, 1, 1);
  phi.set_slice(0, ExactMatrix::from_ints(f, {{1, 0}, {0, 0}}));
  phi.set_slice(1, ExactMatrix::from_ints(f, {{0, 0}, {0, 1}}));
  const PointConfiguration gv = determinantal_locus(phi, Side::V);
  CHECK(gv.size() == 2);
  const DetnlRun run = verify_random_tensor(1, 1, 11, 1);
  CHECK(run.report.skipped);
  CHECK_FALSE(run.report.passed());
}

TEST_CASE("planted tensors over GF(11)") {
  const DetnlRun run = verify_random_tensor(2, 2, 11, 4);
  CHECK(run.report.passed());
  CHECK(run.report.expected_degree == 6);
  CHECK(run.report.locus_v_size == 6);
  CHECK(run.report.locus_w_size == 6);

  const TrilinearForm& phi = run.tensor;
  const PointConfiguration gv = determinantal_locus(phi, Side::V);
  const PointConfiguration gw = determinantal_locus(phi, Side::W);
  for (std::size_t i = 0; i < gv.size(); ++i) CHECK(rank(adjoint_eval(phi, Side::V, gv.point(i))) == 2);

  const std::vector<std::size_t> match = match_pairs(phi, gv, gw);
  std::vector<std::size_t> sorted = match;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> id(match.size());
  std::iota(id.begin(), id.end(), 0);
  CHECK(sorted == id);

  // Shuffled W labels are undone by the matching.
  std::vector<std::size_t> perm = id;
  std::mt19937_64 rng(2);
  std::shuffle(perm.begin(), perm.end(), rng);
  const PointConfiguration shuffled = permute(gw, perm);
  const std::vector<std::size_t> rematch = match_pairs(phi, gv, shuffled);
  for (std::size_t i = 0; i < gv.size(); ++i) CHECK(proportional(shuffled.point(rematch[i]), gw.point(match[i])));

  // Symmetric in V and W.
  const std::vector<std::size_t> back = match_pairs(phi.transposed(), gw, gv);
  for (std::size_t i = 0; i < gv.size(); ++i) CHECK(back[match[i]] == i);
}

TEST_CASE("locus failures") {
  const FieldSpec f = FieldSpec::prime(5);
  // Slices sharing a kernel vector drop rank twice along a line.
  TrilinearForm phi(f, 2, 2);
  phi.set_slice(0, ExactMatrix::from_ints(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  phi.set_slice(1, ExactMatrix::from_ints(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  phi.set_slice(2, ExactMatrix::from_ints(f, {{0, 0, 0}, {0, 0, 0}, {1, 1, 0}}));
  phi.set_slice(3, ExactMatrix::from_ints(f, {{0, 0, 0}, {1, 2, 0}, {0, 0, 0}}));
  CHECK(code_of([&] { determinantal_locus(phi, Side::V); }) == ErrorCode::RankTwoDrop);
  const TrilinearForm big(FieldSpec::prime(2147483629ULL), 2, 2);
  CHECK(code_of([&] { determinantal_locus(big, Side::V); }) == ErrorCode::SearchTooLarge);
}
