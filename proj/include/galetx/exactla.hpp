#pragma once

// Exact scalars over Q or a prime field GF(p), and dense matrices over them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "galetx/error.hpp"

namespace galetx {

enum class FieldKind { Rationals, PrimeField };

class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  // Throws InvalidField unless 2 <= p < 2^31 and p is prime.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == FieldKind::Rationals; }
  bool is_prime() const noexcept { return kind_ == FieldKind::PrimeField; }
  // 0 for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t modulus_ = 0;
};

bool is_prime_number(std::uint64_t n);

class Scalar {
 public:
  // Rational zero.
  Scalar() = default;
  Scalar(const FieldSpec& field, long long value);
  // Maps a rational into the field; throws DivisionByZero if p divides the
  // denominator.
  Scalar(const FieldSpec& field, const mpq_class& value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0LL); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1LL); }
  // Accepts "a", "-a", "a/b" (rationals) and integers (prime fields, reduced
  // mod p; "a/b" is also accepted and interpreted as a * b^-1).
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Only meaningful for the matching field kind.
  const mpq_class& rational() const noexcept { return q_; }
  std::uint64_t residue() const noexcept { return residue_; }

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  // Total order used for deterministic sorting: numeric order on Q, residue
  // order on GF(p).
  friend int compare(const Scalar& a, const Scalar& b);

  Scalar pow(unsigned exponent) const;
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t residue_ = 0;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
bool is_zero_vector(std::span<const Scalar> v);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
// True iff a and b are nonzero multiples of one another (both nonzero).
bool proportional(std::span<const Scalar> a, std::span<const Scalar> b);
// Scales v so its first nonzero entry is 1; zero vectors are returned as is.
Vector normalize_leading_one(std::span<const Scalar> v);

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(const FieldSpec& field, std::size_t n);
  static ExactMatrix from_rows(const FieldSpec& field, std::size_t cols,
                               const std::vector<Vector>& rows);
  static ExactMatrix from_ints(const FieldSpec& field,
                               const std::vector<std::vector<long long>>& rows);
  static ExactMatrix diagonal(const FieldSpec& field, std::span<const Scalar> d);
  // A column matrix.
  static ExactMatrix column(const FieldSpec& field, std::span<const Scalar> v);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Scalar> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const;
  Vector column_vector(std::size_t j) const;
  void set_row(std::size_t i, std::span<const Scalar> v);

  ExactMatrix transpose() const;
  ExactMatrix select_rows(std::span<const std::size_t> indices) const;
  ExactMatrix select_columns(std::span<const std::size_t> indices) const;
  ExactMatrix hstack(const ExactMatrix& right) const;
  ExactMatrix vstack(const ExactMatrix& below) const;

  bool is_zero() const;
  std::string to_string() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Row vector times matrix.
Vector multiply(std::span<const Scalar> v, const ExactMatrix& m);

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

// Right null space; one column per free variable. Column j sets the j-th free
// variable to 1, the other free variables to 0.
ExactMatrix kernel_basis(const ExactMatrix& m);

// Particular solution of a * x = b with all free variables zero, or nullopt
// when the system is inconsistent.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

// Bareiss elimination over integer-cleared rows on Q; plain elimination on
// GF(p).
Scalar determinant(const ExactMatrix& m);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);

// Parses whitespace separated rows, one matrix row per non-empty, non-comment
// line.
ExactMatrix parse_matrix(const FieldSpec& field, std::string_view text);

}  // namespace galetx
