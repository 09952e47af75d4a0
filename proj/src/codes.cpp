#include "galetx/codes.hpp"

namespace galetx {

LinearCode::LinearCode(ExactMatrix generator) : generator_(std::move(generator)) {
  if (!generator_.field().is_prime()) {
    throw Error(ErrorCode::InvalidField, "codes are defined over prime fields only");
  }
  const std::size_t k = generator_.rows(), n = generator_.cols();
  if (k < 1 || k >= n) throw Error(ErrorCode::ShapeMismatch, "need 1 <= k < n");
  if (rank(generator_) != k) throw Error(ErrorCode::ShapeMismatch, "generator rows are dependent");
}

LinearCode grs_code(const GrsSpec& spec) {
  const FieldSpec& field = spec.points.field();
  if (!field.is_prime()) throw Error(ErrorCode::InvalidField, "GRS codes need a prime field");
  const std::size_t n = spec.points.size();
  if (n > field.modulus() + 1) {
    throw Error(ErrorCode::TooManyPoints, std::to_string(n) + " points exceed |P^1(F_p)|");
  }
  if (spec.multipliers.size() != n) throw Error(ErrorCode::DimensionMismatch, "one multiplier per point");
  for (const auto& m : spec.multipliers)
    if (m.is_zero()) throw Error(ErrorCode::DivisionByZero, "multipliers must be nonzero");
  if (spec.k < 1 || spec.k >= n) throw Error(ErrorCode::ShapeMismatch, "need 1 <= k < n");

  ExactMatrix g(field, spec.k, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector column = moment_point(spec.points[j], spec.k - 1);
    for (std::size_t i = 0; i < spec.k; ++i) g(i, j) = spec.multipliers[j] * column[i];
  }
  return LinearCode(std::move(g));
}

LinearCode dual_code(const LinearCode& c) {
  return LinearCode(kernel_basis(c.generator()).transpose());
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (!(a.field() == b.field()) || a.length() != b.length()) {
    throw Error(ErrorCode::ShapeMismatch, "codes differ in field or length");
  }
  if (a.dimension() != b.dimension()) return false;
  return rref(a.generator()).reduced == rref(b.generator()).reduced;
}

Vector grs_dual_multipliers(const GrsSpec& spec) {
  const FieldSpec& field = spec.points.field();
  const std::size_t n = spec.points.size();
  // Every pair of rows of the two generators pairs to
  //   sum_j m_j m'_j a_j^{n-2-t} b_j^t,  t = 0 .. n-2,
  // so u_j = m_j m'_j spans the left kernel of the degree n-2 moment matrix.
  ExactMatrix conditions(field, n - 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector column = moment_point(spec.points[j], n - 2);
    for (std::size_t t = 0; t + 1 < n; ++t) conditions(t, j) = column[t];
  }
  const ExactMatrix kernel = kernel_basis(conditions);
  if (kernel.cols() != 1) throw Error(ErrorCode::NoSolution, "dual multiplier space is not a line");
  Vector out;
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar u = kernel(j, 0);
    if (u.is_zero()) throw Error(ErrorCode::NoSolution, "dual multiplier vanishes", {j});
    out.push_back(u / spec.multipliers[j]);
  }
  return out;
}

Vector grs_dual_multipliers_closed_form(const GrsSpec& spec) {
  const std::size_t n = spec.points.size();
  std::vector<Scalar> x;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& ab = spec.points[j];
    if (ab[0].is_zero()) throw Error(ErrorCode::DimensionMismatch, "closed form needs affine points", {j});
    x.push_back(ab[1] / ab[0]);
  }
  Vector out;
  for (std::size_t j = 0; j < n; ++j) {
    Scalar prod = Scalar::one(x[j].field());
    for (std::size_t l = 0; l < n; ++l)
      if (l != j) prod *= x[j] - x[l];
    // The affine column (1, x, x^2, ...) of (a : b) = (a, a x) differs from the
    // homogeneous one by a^{k-1}; undo it on both sides.
    const Scalar a = spec.points[j][0];
    const Scalar scale = a.pow(static_cast<unsigned>(n - 2));
    out.push_back((prod * spec.multipliers[j] * scale).inverse());
  }
  return out;
}

std::size_t min_distance(const LinearCode& c) {
  const std::uint64_t p = c.field().modulus();
  const std::size_t k = c.dimension(), n = c.length();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > kMinDistanceBound / p) {
      throw Error(ErrorCode::TooLarge, "p^k exceeds the enumeration bound");
    }
    total *= p;
  }
  std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = c.generator()(i, j).residue();

  // Odometer over messages; adding row i whenever digit i advances keeps the
  // codeword current (p additions of a row wrap back to zero).
  std::vector<std::uint64_t> digits(k, 0), word(n, 0);
  std::size_t best = n + 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t i = 0;
    while (true) {
      for (std::size_t j = 0; j < n; ++j) {
        word[j] += rows[i][j];
        if (word[j] >= p) word[j] -= p;
      }
      if (++digits[i] < p) break;
      digits[i] = 0;
      ++i;
    }
    std::size_t weight = 0;
    for (auto w : word) weight += w != 0;
    if (weight < best) best = weight;
  }
  return best;
}

}  // namespace galetx
