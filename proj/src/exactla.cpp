#include "galetx/exactla.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace galetx {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::ConfigurationTooLarge: return "ConfigurationTooLarge";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::GaleDegenerate: return "GaleDegenerate";
    case ErrorCode::GaleNonReduced: return "GaleNonReduced";
    case ErrorCode::NotTwoBases: return "NotTwoBases";
    case ErrorCode::FirstBlockNotBasis: return "FirstBlockNotBasis";
    case ErrorCode::IsotropicObstruction: return "IsotropicObstruction";
    case ErrorCode::NotLGP: return "NotLGP";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::TooManyPoints: return "TooManyPoints";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::RankTwoDrop: return "RankTwoDrop";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::LocusIncomplete: return "LocusIncomplete";
    case ErrorCode::RetryBudgetExceeded: return "RetryBudgetExceeded";
  }
  return "Unknown";
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime_number(p)) {
    throw Error(ErrorCode::InvalidField,
                "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  FieldSpec f;
  f.kind_ = FieldKind::PrimeField;
  f.modulus_ = p;
  return f;
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "rational";
  return "prime " + std::to_string(modulus_);
}

namespace {

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, long long value) : field_(field) {
  if (field.is_rational()) {
    q_ = mpq_class(static_cast<long>(value));
  } else {
    const auto p = static_cast<long long>(field.modulus());
    long long r = value % p;
    if (r < 0) r += p;
    residue_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint64_t p = field.modulus();
  const std::uint64_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero,
                "denominator of " + value.get_str() + " vanishes mod " +
                    std::to_string(p));
  }
  const std::uint64_t num = reduce_mpz(value.get_num(), p);
  residue_ = num * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  mpq_class q;
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::ParseError, "cannot parse scalar '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  q = mpq_class(n, d);
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : residue_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorCode::FieldMismatch,
                "cannot combine " + field_.to_string() + " and " + o.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    r.q_ = 1 / q_;
  } else {
    r.residue_ = pow_mod(residue_, field_.modulus() - 2, field_.modulus());
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    r.q_ = -q_;
  } else if (residue_ != 0) {
    r.residue_ = field_.modulus() - residue_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    residue_ = (residue_ + o.residue_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ -= o.q_;
  } else {
    residue_ = (residue_ + field_.modulus() - o.residue_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    residue_ = residue_ * o.residue_ % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.residue_ == b.residue_;
}

int compare(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_rational()) return cmp(a.q_, b.q_) < 0 ? -1 : (a.q_ == b.q_ ? 0 : 1);
  return a.residue_ < b.residue_ ? -1 : (a.residue_ == b.residue_ ? 0 : 1);
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(residue_);
}

Vector zero_vector(const FieldSpec& field, std::size_t n) {
  return Vector(n, Scalar::zero(field));
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product lengths differ");
  if (a.empty()) return Scalar();
  Scalar acc = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool proportional(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) return false;
  if (is_zero_vector(a) || is_zero_vector(b)) return false;
  // a ~ b iff all 2x2 minors a_i b_j - a_j b_i vanish; it suffices to compare
  // against one pivot where a is nonzero.
  std::size_t pivot = 0;
  while (a[pivot].is_zero()) ++pivot;
  if (b[pivot].is_zero()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(a[pivot] * b[j] == a[j] * b[pivot])) return false;
  }
  return true;
}

Vector normalize_leading_one(std::span<const Scalar> v) {
  Vector out(v.begin(), v.end());
  auto it = std::find_if(out.begin(), out.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == out.end()) return out;
  const Scalar inv = it->inverse();
  for (auto& s : out) s *= inv;
  return out;
}

ExactMatrix::ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

ExactMatrix ExactMatrix::identity(const FieldSpec& field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& field, std::size_t cols,
                                   const std::vector<Vector>& rows) {
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(cols));
    }
    m.set_row(i, rows[i]);
  }
  return m;
}

ExactMatrix ExactMatrix::from_ints(const FieldSpec& field,
                                   const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(field, rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::diagonal(const FieldSpec& field, std::span<const Scalar> d) {
  ExactMatrix m(field, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::column(const FieldSpec& field, std::span<const Scalar> v) {
  ExactMatrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vector ExactMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return Vector(r.begin(), r.end());
}

Vector ExactMatrix::column_vector(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void ExactMatrix::set_row(std::size_t i, std::span<const Scalar> v) {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!(v[j].field() == field_)) throw Error(ErrorCode::FieldMismatch, "entry field differs from matrix field");
    (*this)(i, j) = v[j];
  }
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::select_rows(std::span<const std::size_t> indices) const {
  ExactMatrix m(field_, indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= rows_) throw Error(ErrorCode::DimensionMismatch, "row index out of range");
    m.set_row(k, row(indices[k]));
  }
  return m;
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> indices) const {
  ExactMatrix m(field_, rows_, indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= cols_) throw Error(ErrorCode::DimensionMismatch, "column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, indices[k]);
  }
  return m;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& right) const {
  if (rows_ != right.rows_) throw Error(ErrorCode::DimensionMismatch, "hstack row counts differ");
  if (!(field_ == right.field_)) throw Error(ErrorCode::FieldMismatch, "hstack fields differ");
  ExactMatrix m(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& below) const {
  if (cols_ != below.cols_) throw Error(ErrorCode::DimensionMismatch, "vstack column counts differ");
  if (!(field_ == below.field_)) throw Error(ErrorCode::FieldMismatch, "vstack fields differ");
  ExactMatrix m(field_, rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) m.set_row(i, row(i));
  for (std::size_t i = 0; i < below.rows_; ++i) m.set_row(rows_ + i, below.row(i));
  return m;
}

bool ExactMatrix::is_zero() const { return is_zero_vector(data_); }

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j).to_string();
    }
    os << '\n';
  }
  return os.str();
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "product shapes incompatible");
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "product fields differ");
  ExactMatrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "sum shapes differ");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "difference shapes differ");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector multiply(std::span<const Scalar> v, const ExactMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix shapes incompatible");
  Vector out = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult out{m, {}, 0};
  ExactMatrix& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a(sel, col).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t j = col; j < cols; ++j) std::swap(a(sel, j), a(pivot_row, j));
    }
    const Scalar inv = a(pivot_row, col).inverse();
    for (std::size_t j = col; j < cols; ++j) a(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        if (!a(pivot_row, j).is_zero()) a(i, j) -= factor * a(pivot_row, j);
      }
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.rank = out.pivot_columns.size();
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

ExactMatrix kernel_basis(const ExactMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  ExactMatrix basis(m.field(), cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) {
      basis(r.pivot_columns[i], k) = -r.reduced(i, f);
    }
  }
  return basis;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: a.rows != b.rows");
  const RrefResult r = rref(a.hstack(b));
  const std::size_t n = a.cols();
  for (auto c : r.pivot_columns) {
    if (c >= n) return std::nullopt;
  }
  ExactMatrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivot_columns[i], j) = r.reduced(i, n + j);
  }
  return x;
}

namespace {

Scalar determinant_rational(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    }
    scale *= lcm;
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m(i, j).rational();
      a[i * n + j] = q.get_num() * (lcm / q.get_den());
    }
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t sel = k;
    while (sel < n && a[sel * n + k] == 0) ++sel;
    if (sel == n) return Scalar::zero(m.field());
    if (sel != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[sel * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = v;
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  mpq_class det(sign * a[n * n - 1], scale);
  det.canonicalize();
  return Scalar(m.field(), det);
}

Scalar determinant_elimination(const ExactMatrix& m) {
  ExactMatrix a = m;
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t sel = k;
    while (sel < n && a(sel, k).is_zero()) ++sel;
    if (sel == n) return Scalar::zero(m.field());
    if (sel != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    const Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar factor = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

}  // namespace

Scalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar::one(m.field());
  return m.field().is_rational() ? determinant_rational(m) : determinant_elimination(m);
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RrefResult r = rref(m.hstack(ExactMatrix::identity(m.field(), n)));
  if (r.rank < n || r.pivot_columns[n - 1] != n - 1) return std::nullopt;
  std::vector<std::size_t> right(n);
  for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
  return r.reduced.select_columns(right);
}

ExactMatrix parse_matrix(const FieldSpec& field, std::string_view text) {
  std::vector<Vector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    Vector row;
    while (ls >> tok) row.push_back(Scalar::parse(field, tok));
    if (row.empty()) continue;
    if (rows.empty()) cols = row.size();
    if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    rows.push_back(std::move(row));
  }
  return ExactMatrix::from_rows(field, cols, rows);
}

}  // namespace galetx
