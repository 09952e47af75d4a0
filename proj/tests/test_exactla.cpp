#include <doctest.h>

#include <random>

#include "galetx/exactla.hpp"
#include "oracle.hpp"

using namespace galetx;

namespace {

const FieldSpec Q = FieldSpec::rationals();

ExactMatrix random_matrix(const FieldSpec& f, std::size_t n, std::size_t m, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  ExactMatrix a(f, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = Scalar(f, dist(rng));
  return a;
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(FieldSpec::prime(101).modulus() == 101);
  CHECK_THROWS_AS(FieldSpec::prime(91), Error);
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
  CHECK_THROWS_AS(FieldSpec::prime(1ULL << 31), Error);
  CHECK(FieldSpec::prime(2147483647ULL).modulus() == 2147483647ULL);
  CHECK(FieldSpec::prime(7).to_string() == "prime 7");
  CHECK(Q.to_string() == "rational");
}

TEST_CASE("scalar arithmetic") {
  const FieldSpec f7 = FieldSpec::prime(7);
  CHECK(Scalar(f7, -1).residue() == 6);
  CHECK((Scalar(f7, 3) * Scalar(f7, 5)).residue() == 1);
  CHECK((Scalar(f7, 3).inverse() * Scalar(f7, 3)).is_one());
  CHECK_THROWS_AS(Scalar::zero(f7).inverse(), Error);
  CHECK(Scalar::parse(Q, "-6/4").to_string() == "-3/2");
  CHECK_THROWS_AS(Scalar::parse(Q, "6/-4"), Error);
  CHECK(Scalar::parse(f7, "1/2").residue() == 4);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(Q, "abc"), Error);
  CHECK_THROWS_AS(Scalar(Q, 1) + Scalar(f7, 1), Error);
  CHECK(Scalar(Q, 2).pow(10) == Scalar(Q, 1024));
  // Large values stay exact.
  Scalar big = Scalar(Q, 3).pow(200);
  CHECK(big / Scalar(Q, 3).pow(199) == Scalar(Q, 3));
}

TEST_CASE("rref") {
  const RrefResult id = rref(ExactMatrix::identity(Q, 2));
  CHECK(id.reduced == ExactMatrix::identity(Q, 2));
  CHECK(id.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(id.rank == 2);

  const RrefResult prop = rref(ExactMatrix::from_ints(Q, {{1, 1}, {2, 2}}));
  CHECK(prop.rank == 1);
  CHECK(prop.pivot_columns == std::vector<std::size_t>{0});
  CHECK(prop.reduced == ExactMatrix::from_ints(Q, {{1, 1}, {0, 0}}));

  std::mt19937_64 rng(5);
  const FieldSpec f101 = FieldSpec::prime(101);
  for (int trial = 0; trial < 30; ++trial) {
    ExactMatrix a = random_matrix(f101, 5, 7, rng);
    if (trial % 3 == 0) a.set_row(4, a.row_vector(0));  // force some rank loss
    CHECK(rank(a) == oracle::rank(a));
    const RrefResult rr = rref(a);
    // Row space preserved: stacking adds nothing.
    CHECK(rank(a.vstack(rr.reduced)) == rr.rank);
    CHECK(rref(rr.reduced).reduced == rr.reduced);
  }
}

TEST_CASE("kernel basis") {
  const ExactMatrix single = kernel_basis(ExactMatrix::from_ints(Q, {{1, 1}}));
  REQUIRE(single.cols() == 1);
  CHECK(proportional(single.column_vector(0), Vector{Scalar(Q, 1), Scalar(Q, -1)}));

  CHECK(kernel_basis(ExactMatrix::from_ints(Q, {{2, 1}, {1, 1}})).cols() == 0);

  const ExactMatrix m = ExactMatrix::from_ints(Q, {{1, 0, 1, 1}, {0, 1, 1, 2}});
  const ExactMatrix k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  CHECK(k == ExactMatrix::from_ints(Q, {{-1, -1}, {-1, -2}, {1, 0}, {0, 1}}));

  std::mt19937_64 rng(8);
  for (const FieldSpec& f : {Q, FieldSpec::prime(7)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ExactMatrix a = random_matrix(f, 3 + trial % 3, 6, rng, 2);
      const ExactMatrix ker = kernel_basis(a);
      CHECK(oracle::product_vanishes(a.transpose(), ker));
      CHECK(ker.cols() + oracle::rank(a) == 6);
      CHECK(oracle::rank(ker) == ker.cols());
    }
  }
}

TEST_CASE("solve") {
  const ExactMatrix b = ExactMatrix::from_ints(Q, {{3}, {-2}});
  CHECK(*solve(ExactMatrix::identity(Q, 2), b) == b);
  CHECK_FALSE(solve(ExactMatrix::from_ints(Q, {{1}, {1}}), ExactMatrix::from_ints(Q, {{0}, {1}})).has_value());

  const FieldSpec f7 = FieldSpec::prime(7);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix a = random_matrix(f7, 4, 6, rng);
    const ExactMatrix x = random_matrix(f7, 6, 2, rng);
    const ExactMatrix rhs = a * x;
    const auto sol = solve(a, rhs);
    REQUIRE(sol.has_value());
    CHECK((a * *sol - rhs).is_zero());
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(ExactMatrix::identity(Q, 4)).is_one());
  CHECK(determinant(ExactMatrix::from_ints(Q, {{0, 1}, {1, 0}})) == Scalar(Q, -1));
  CHECK(determinant(ExactMatrix(Q, 0, 0)).is_one());
  CHECK_THROWS_AS(determinant(ExactMatrix(Q, 2, 3)), Error);

  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const ExactMatrix a = random_matrix(Q, n, n, rng);
      CHECK(determinant(a).rational() == oracle::cofactor_det(oracle::dense(a).q));
    }
  }
  // Rational entries go through the denominator-clearing path.
  const ExactMatrix frac = ExactMatrix::from_rows(
      Q, 2, {{Scalar::parse(Q, "1/2"), Scalar::parse(Q, "1/3")}, {Scalar::parse(Q, "1/4"), Scalar::parse(Q, "1/5")}});
  CHECK(determinant(frac) == Scalar::parse(Q, "1/60"));

  const FieldSpec f101 = FieldSpec::prime(101);
  for (int trial = 0; trial < 10; ++trial) {
    const ExactMatrix a = random_matrix(Q, 5, 5, rng);
    ExactMatrix b(f101, 5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) b(i, j) = Scalar(f101, a(i, j).rational());
    CHECK(determinant(b) == Scalar(f101, determinant(a).rational()));
  }
}

TEST_CASE("inverse and products") {
  std::mt19937_64 rng(2);
  const ExactMatrix a = random_matrix(Q, 4, 4, rng);
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == ExactMatrix::identity(Q, 4));
  CHECK_FALSE(inverse(ExactMatrix::from_ints(Q, {{1, 2}, {2, 4}})).has_value());
  CHECK_THROWS_AS(ExactMatrix(Q, 2, 3) * ExactMatrix(Q, 2, 3), Error);
  CHECK_THROWS_AS(ExactMatrix(Q, 2, 2) + ExactMatrix(FieldSpec::prime(5), 2, 2), Error);
}

TEST_CASE("parse matrix") {
  const ExactMatrix m = parse_matrix(Q, "# comment\n1 2/3\n\n-4 5 # tail\n");
  CHECK(m == ExactMatrix::from_rows(Q, 2, {{Scalar(Q, 1), Scalar::parse(Q, "2/3")}, {Scalar(Q, -4), Scalar(Q, 5)}}));
  CHECK_THROWS_AS(parse_matrix(Q, "1 2\n3\n"), Error);
}
