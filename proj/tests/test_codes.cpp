#include <doctest.h>

#include <random>

#include "galetx/codes.hpp"
#include "galetx/transform.hpp"
#include "oracle.hpp"

using namespace galetx;

namespace {

const FieldSpec F7 = FieldSpec::prime(7);

GrsSpec spec(const FieldSpec& f, std::vector<long long> pts, std::size_t k, std::vector<long long> mult = {}) {
  Vector m;
  for (std::size_t j = 0; j < pts.size(); ++j) m.push_back(Scalar(f, mult.empty() ? 1 : mult[j]));
  return GrsSpec{ParameterList::affine(f, pts), m, k};
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

// Minimum weight by listing every message, with Scalar arithmetic.
std::size_t brute_distance(const LinearCode& c) {
  const std::uint64_t p = c.field().modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.dimension(); ++i) total *= p;
  std::size_t best = c.length();
  for (std::uint64_t msg = 1; msg < total; ++msg) {
    Vector m;
    for (std::uint64_t x = msg, i = 0; i < c.dimension(); ++i, x /= p) m.push_back(Scalar(c.field(), static_cast<long long>(x % p)));
    const Vector w = multiply(m, c.generator());
    std::size_t weight = 0;
    for (const auto& x : w) weight += !x.is_zero();
    best = std::min(best, weight);
  }
  return best;
}

}  // namespace

TEST_CASE("GRS construction") {
  const LinearCode rep = grs_code(spec(F7, {0, 1, 2, 3, 4, 5}, 1, {1, 2, 3, 4, 5, 6}));
  CHECK(rep.generator() == ExactMatrix::from_ints(F7, {{1, 2, 3, 4, 5, 6}}));
  const LinearCode vdm = grs_code(spec(F7, {0, 1, 2, 3, 4, 5}, 2));
  CHECK(vdm.generator() == ExactMatrix::from_ints(F7, {{1, 1, 1, 1, 1, 1}, {0, 1, 2, 3, 4, 5}}));
  CHECK(rank(vdm.generator()) == 2);
  CHECK(code_of([] { LinearCode(ExactMatrix::from_ints(FieldSpec::rationals(), {{1, 0}})); }) == ErrorCode::InvalidField);
  CHECK(code_of([] { LinearCode(ExactMatrix::from_ints(F7, {{1, 1, 0}, {2, 2, 0}})); }) == ErrorCode::ShapeMismatch);
  // Point at infinity picks the top coefficient.
  const GrsSpec inf{ParameterList(F7, {{Scalar(F7, 1), Scalar(F7, 2)}, {Scalar(F7, 0), Scalar(F7, 1)}, {Scalar(F7, 1), Scalar(F7, 0)}}),
                    Vector(3, Scalar::one(F7)), 2};
  CHECK(grs_code(inf).generator() == ExactMatrix::from_ints(F7, {{1, 0, 1}, {2, 1, 0}}));
}

TEST_CASE("dual codes") {
  const FieldSpec f3 = FieldSpec::prime(3);
  const LinearCode ones(ExactMatrix::from_ints(f3, {{1, 1, 1, 1}}));
  const LinearCode parity = dual_code(ones);
  CHECK(parity.dimension() == 3);
  CHECK((ones.generator() * parity.generator().transpose()).is_zero());

  const LinearCode c = grs_code(spec(F7, {0, 1, 2, 3, 4, 5}, 2));
  CHECK(dual_code(c).dimension() == 4);
  CHECK(same_code(dual_code(dual_code(c)), c));

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> d(0, 6);
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix g(F7, 3, 7);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 7; ++j) g(i, j) = Scalar(F7, d(rng));
    if (rank(g) != 3) continue;
    const LinearCode rc(g);
    CHECK(same_code(dual_code(dual_code(rc)), rc));
    CHECK(dual_code(rc).dimension() + 3 == 7);
  }
}

TEST_CASE("same code") {
  const LinearCode c = grs_code(spec(F7, {0, 1, 2, 3, 4, 5}, 2));
  const ExactMatrix swapped = c.generator().select_rows(std::vector<std::size_t>{1, 0});
  CHECK(same_code(c, LinearCode(swapped)));
  CHECK(same_code(c, LinearCode(ExactMatrix::from_ints(F7, {{1, 2, 3, 4, 5, 6}, {2, 3, 4, 5, 6, 0}}))));
  CHECK_FALSE(same_code(c, dual_code(c)));
  CHECK_FALSE(same_code(c, LinearCode(ExactMatrix::from_ints(F7, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}))));
  CHECK(code_of([&] { same_code(c, LinearCode(ExactMatrix::from_ints(F7, {{1, 0, 0}}))); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("dual multipliers") {
  const GrsSpec s = spec(F7, {0, 1, 2, 3, 4, 5}, 2);
  const Vector m = grs_dual_multipliers(s);
  CHECK(same_code(dual_code(grs_code(s)), grs_code(GrsSpec{s.points, m, 4})));
  CHECK(proportional(m, grs_dual_multipliers_closed_form(s)));

  const GrsSpec sym = spec(F7, {1, 2, 5, 6}, 2);
  CHECK(same_code(dual_code(grs_code(sym)), grs_code(GrsSpec{sym.points, grs_dual_multipliers(sym), 2})));

  const GrsSpec top = spec(F7, {0, 1, 2, 3, 4}, 4, {1, 2, 3, 4, 5});
  const Vector mt = grs_dual_multipliers(top);
  CHECK(same_code(dual_code(grs_code(top)), LinearCode(ExactMatrix::from_rows(F7, 5, {mt}))));
}

TEST_CASE("minimum distance") {
  CHECK(min_distance(LinearCode(ExactMatrix::from_ints(F7, {{1, 1, 1, 1, 1}}))) == 5);
  const LinearCode c = grs_code(spec(F7, {0, 1, 2, 3, 4, 5}, 2));
  CHECK(min_distance(c) == 5);
  CHECK(min_distance(dual_code(c)) == 3);
  CHECK(brute_distance(dual_code(c)) == 3);
  const LinearCode nonmds(ExactMatrix::from_ints(F7, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
  CHECK(min_distance(nonmds) == 2);
  CHECK(brute_distance(nonmds) == 2);
  const FieldSpec f13 = FieldSpec::prime(13);
  ExactMatrix big(f13, 7, 9);
  for (std::size_t i = 0; i < 7; ++i) big(i, i) = Scalar::one(f13);
  CHECK(code_of([&] { min_distance(LinearCode(big)); }) == ErrorCode::TooLarge);
}

TEST_CASE("dual code of a GRS code is the Gale transform") {
  const FieldSpec f13 = FieldSpec::prime(13);
  for (std::size_t k = 2; k <= 4; ++k) {
    const GrsSpec s = spec(f13, {0, 1, 2, 3, 4, 5, 6, 7}, k);
    const LinearCode d = dual_code(grs_code(s));
    const PointConfiguration columns(f13, d.dimension() - 1, d.generator().transpose());
    const PointConfiguration curve = rnc_embed(s.points, k - 1);
    CHECK(is_equivalent_labeled(columns, gale_transform(curve).transform) == Equivalence::Equivalent);
  }
}
