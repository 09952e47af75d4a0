#include "galetx/detnl.hpp"

#include <algorithm>
#include <sstream>

#include "galetx/transform.hpp"

namespace galetx {

TrilinearForm::TrilinearForm(const FieldSpec& field, std::size_t r, std::size_t s)
    : field_(field), r_(r), s_(s) {
  if (!field.is_prime()) throw Error(ErrorCode::InvalidField, "trilinear forms live over prime fields");
  if (r < 1 || s < 1) throw Error(ErrorCode::DimensionMismatch, "need r, s >= 1");
  entries_.assign((r + s) * (r + 1) * (s + 1), Scalar::zero(field));
}

ExactMatrix TrilinearForm::slice(std::size_t m) const {
  ExactMatrix out(field_, r_ + 1, s_ + 1);
  for (std::size_t a = 0; a <= r_; ++a)
    for (std::size_t j = 0; j <= s_; ++j) out(a, j) = at(m, a, j);
  return out;
}

void TrilinearForm::set_slice(std::size_t m, const ExactMatrix& block) {
  if (block.rows() != r_ + 1 || block.cols() != s_ + 1 || m >= f()) {
    throw Error(ErrorCode::DimensionMismatch, "slice shape mismatch");
  }
  for (std::size_t a = 0; a <= r_; ++a)
    for (std::size_t j = 0; j <= s_; ++j) at(m, a, j) = block(a, j);
}

TrilinearForm TrilinearForm::transposed() const {
  TrilinearForm t(field_, s_, r_);
  for (std::size_t m = 0; m < f(); ++m)
    for (std::size_t a = 0; a <= r_; ++a)
      for (std::size_t j = 0; j <= s_; ++j) t.at(m, j, a) = at(m, a, j);
  return t;
}

std::string TrilinearForm::serialize() const {
  std::ostringstream os;
  os << "field prime " << field_.modulus() << "\n";
  os << "dims " << r_ << " " << s_ << "\n";
  for (std::size_t m = 0; m < f(); ++m) {
    os << "# slice " << m << "\n" << slice(m).to_string();
  }
  return os.str();
}

TrilinearForm TrilinearForm::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, body;
  std::optional<FieldSpec> field;
  std::size_t r = 0, s = 0;
  bool have_dims = false;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "field") {
      std::string kind;
      std::uint64_t p = 0;
      if (!(ls >> kind >> p) || kind != "prime") throw Error(ErrorCode::ParseError, "tensor field must be 'prime P'");
      field = FieldSpec::prime(p);
    } else if (word == "dims") {
      if (!(ls >> r >> s)) throw Error(ErrorCode::ParseError, "bad dims line");
      have_dims = true;
    } else {
      body += line + "\n";
    }
  }
  if (!field || !have_dims) throw Error(ErrorCode::ParseError, "tensor needs field and dims lines");
  TrilinearForm phi(*field, r, s);
  const ExactMatrix all = parse_matrix(*field, body);
  if (all.rows() != phi.f() * (r + 1) || all.cols() != s + 1) {
    throw Error(ErrorCode::DimensionMismatch, "expected f blocks of (r+1) x (s+1) entries");
  }
  for (std::size_t m = 0; m < phi.f(); ++m)
    for (std::size_t a = 0; a <= r; ++a)
      for (std::size_t j = 0; j <= s; ++j) phi.at(m, a, j) = all(m * (r + 1) + a, j);
  return phi;
}

ExactMatrix adjoint_eval(const TrilinearForm& phi, Side side, std::span<const Scalar> point) {
  const std::size_t r1 = phi.r() + 1, s1 = phi.s() + 1, f = phi.f();
  if (side == Side::V) {
    if (point.size() != r1) throw Error(ErrorCode::DimensionMismatch, "side V points have r+1 coordinates");
    ExactMatrix out(phi.field(), s1, f);
    for (std::size_t j = 0; j < s1; ++j)
      for (std::size_t m = 0; m < f; ++m)
        for (std::size_t a = 0; a < r1; ++a) out(j, m) += phi.at(m, a, j) * point[a];
    return out;
  }
  if (point.size() != s1) throw Error(ErrorCode::DimensionMismatch, "side W points have s+1 coordinates");
  ExactMatrix out(phi.field(), r1, f);
  for (std::size_t a = 0; a < r1; ++a)
    for (std::size_t m = 0; m < f; ++m)
      for (std::size_t j = 0; j < s1; ++j) out(a, m) += phi.at(m, a, j) * point[j];
  return out;
}

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

std::size_t rank_mod(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, std::uint64_t p) {
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t sel = rk;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != rk)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[rk * cols + j]);
    const std::uint64_t inv = inv_mod(a[rk * cols + c], p);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      const std::uint64_t f = a[i * cols + c] * inv % p;
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = (a[i * cols + j] + (p - f) * a[rk * cols + j]) % p;
      }
    }
    ++rk;
  }
  return rk;
}

}  // namespace

PointConfiguration determinantal_locus(const TrilinearForm& phi, Side side) {
  const FieldSpec& field = phi.field();
  const std::uint64_t p = field.modulus();
  const std::size_t r1 = phi.r() + 1, s1 = phi.s() + 1, f = phi.f();
  const std::size_t dim = side == Side::V ? phi.r() : phi.s();
  const std::size_t n_coords = dim + 1;
  const std::size_t out_rows = side == Side::V ? s1 : r1;
  std::uint64_t scan = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (scan > kLocusScanBound / p) throw Error(ErrorCode::SearchTooLarge, "p^dim exceeds the scan bound");
    scan *= p;
  }

  // contraction[c][row][m]: coefficient of point coordinate c.
  std::vector<std::uint64_t> contraction(n_coords * out_rows * f);
  for (std::size_t m = 0; m < f; ++m)
    for (std::size_t a = 0; a < r1; ++a)
      for (std::size_t j = 0; j < s1; ++j) {
        const std::uint64_t v = phi.at(m, a, j).residue();
        if (side == Side::V) {
          contraction[(a * out_rows + j) * f + m] = v;
        } else {
          contraction[(j * out_rows + a) * f + m] = v;
        }
      }

  std::vector<std::vector<std::uint64_t>> hits;
  std::vector<std::uint64_t> x(n_coords), mat(out_rows * f);
  for (std::size_t lead = 0; lead < n_coords; ++lead) {
    const std::size_t free = n_coords - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::fill(x.begin(), x.end(), 0);
      x[lead] = 1;
      std::uint64_t rest = code;
      for (std::size_t i = n_coords; i-- > lead + 1;) {
        x[i] = rest % p;
        rest /= p;
      }
      std::fill(mat.begin(), mat.end(), 0);
      for (std::size_t c = 0; c < n_coords; ++c) {
        if (!x[c]) continue;
        const std::uint64_t* src = &contraction[c * out_rows * f];
        for (std::size_t k = 0; k < out_rows * f; ++k) mat[k] = (mat[k] + x[c] * src[k]) % p;
      }
      const std::size_t rk = rank_mod(mat, out_rows, f, p);
      if (rk + 1 == out_rows) {
        hits.push_back(x);
      } else if (rk + 1 < out_rows) {
        std::vector<std::size_t> coords(x.begin(), x.end());
        throw Error(ErrorCode::RankTwoDrop, "adjoint drops rank by at least 2 at a point", coords);
      }
    }
  }
  if (hits.empty()) throw Error(ErrorCode::LocusIncomplete, "no rational rank-drop points");
  std::sort(hits.begin(), hits.end());
  std::vector<Vector> rows;
  for (const auto& h : hits) {
    Vector v;
    for (auto c : h) v.push_back(Scalar(field, static_cast<long long>(c)));
    rows.push_back(std::move(v));
  }
  return PointConfiguration::from_rows(field, dim, rows);
}

namespace {

// The line spanned by the left kernel of m, or nullopt if it is not a line.
std::optional<Vector> left_kernel_line(const ExactMatrix& m) {
  const ExactMatrix k = kernel_basis(m.transpose());
  if (k.cols() != 1) return std::nullopt;
  return k.column_vector(0);
}

}  // namespace

std::vector<std::size_t> match_pairs(const TrilinearForm& phi, const PointConfiguration& gv,
                                     const PointConfiguration& gw) {
  if (gv.size() != gw.size()) throw Error(ErrorCode::NotBijective, "loci have different sizes");
  std::vector<std::size_t> match(gv.size());
  std::vector<bool> used(gw.size(), false);
  for (std::size_t i = 0; i < gv.size(); ++i) {
    const auto y = left_kernel_line(adjoint_eval(phi, Side::V, gv.point(i)));
    if (!y) throw Error(ErrorCode::NoMatch, "adjoint kernel at a V point is not a line", {i});
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < gw.size() && !found; ++j)
      if (proportional(*y, gw.point(j))) found = j;
    if (!found) throw Error(ErrorCode::NoMatch, "kernel line is not a point of the W locus", {i});
    if (used[*found]) throw Error(ErrorCode::NotBijective, "two V points share a W partner", {i, *found});
    used[*found] = true;
    match[i] = *found;
    const auto x = left_kernel_line(adjoint_eval(phi, Side::W, gw.point(*found)));
    if (!x || !proportional(*x, gv.point(i))) {
      throw Error(ErrorCode::NotBijective, "matching is not symmetric", {i, *found});
    }
  }
  return match;
}

VeroneseGaleReport verify_veronese_gale(const TrilinearForm& phi) {
  VeroneseGaleReport rep;
  rep.r = phi.r();
  rep.s = phi.s();
  rep.expected_degree = binomial(phi.r() + phi.s(), phi.s());
  const PointConfiguration gv = determinantal_locus(phi, Side::V);
  const PointConfiguration gw = determinantal_locus(phi, Side::W);
  rep.locus_v_size = gv.size();
  rep.locus_w_size = gw.size();
  if (gv.size() != rep.expected_degree || gw.size() != rep.expected_degree) {
    throw Error(ErrorCode::LocusIncomplete,
                "loci have " + std::to_string(gv.size()) + " and " + std::to_string(gw.size()) +
                    " rational points, expected " + std::to_string(rep.expected_degree));
  }
  rep.matching = match_pairs(phi, gv, gw);
  if (phi.r() < 2 || phi.s() < 2) {
    rep.skipped = true;
    return rep;
  }
  const PointConfiguration gw_ordered = permute(gw, rep.matching);
  const GaleResult gale = gale_transform(veronese(gw_ordered, static_cast<unsigned>(phi.r() - 1)));
  rep.equivalence = is_equivalent_labeled(gale.transform, veronese(gv, static_cast<unsigned>(phi.s() - 1)));
  return rep;
}

namespace {

Vector random_projective_point(const FieldSpec& field, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(0, static_cast<long long>(field.modulus()) - 1);
  while (true) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar(field, dist(rng)));
    if (!is_zero_vector(v)) return v;
  }
}

}  // namespace

TrilinearForm random_tensor(const FieldSpec& field, std::size_t r, std::size_t s, std::mt19937_64& rng) {
  TrilinearForm phi(field, r, s);
  std::uniform_int_distribution<long long> dist(0, static_cast<long long>(field.modulus()) - 1);
  for (std::size_t m = 0; m < phi.f(); ++m)
    for (std::size_t a = 0; a <= r; ++a)
      for (std::size_t j = 0; j <= s; ++j) phi.at(m, a, j) = Scalar(field, dist(rng));
  return phi;
}

TrilinearForm random_planted_tensor(const FieldSpec& field, std::size_t r, std::size_t s,
                                    std::mt19937_64& rng) {
  const std::size_t r1 = r + 1, s1 = s + 1, f = r + s;
  const std::size_t planted = r1 * s1 - f;
  // Bilinear forms B (row-major r1 x s1) with x^T B y = 0 on each planted pair.
  ExactMatrix conditions(field, planted, r1 * s1);
  for (std::size_t i = 0; i < planted; ++i) {
    const Vector x = random_projective_point(field, r1, rng);
    const Vector y = random_projective_point(field, s1, rng);
    for (std::size_t a = 0; a < r1; ++a)
      for (std::size_t j = 0; j < s1; ++j) conditions(i, a * s1 + j) = x[a] * y[j];
  }
  const ExactMatrix forms = kernel_basis(conditions);
  std::uniform_int_distribution<long long> dist(0, static_cast<long long>(field.modulus()) - 1);
  TrilinearForm phi(field, r, s);
  for (std::size_t m = 0; m < f; ++m) {
    Vector combo = zero_vector(field, r1 * s1);
    for (std::size_t c = 0; c < forms.cols(); ++c) {
      const Scalar coeff(field, dist(rng));
      for (std::size_t k = 0; k < r1 * s1; ++k) combo[k] += coeff * forms(k, c);
    }
    for (std::size_t a = 0; a < r1; ++a)
      for (std::size_t j = 0; j < s1; ++j) phi.at(m, a, j) = combo[a * s1 + j];
  }
  return phi;
}

DetnlRun verify_random_tensor(std::size_t r, std::size_t s, std::uint64_t p, std::uint64_t seed,
                              std::size_t retries) {
  const FieldSpec field = FieldSpec::prime(p);
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= retries; ++attempt) {
    TrilinearForm phi = random_planted_tensor(field, r, s, rng);
    try {
      VeroneseGaleReport rep = verify_veronese_gale(phi);
      return {std::move(rep), std::move(phi), attempt};
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::LocusIncomplete:
        case ErrorCode::RankTwoDrop:
        case ErrorCode::NoMatch:
        case ErrorCode::NotBijective:
        case ErrorCode::Degenerate:
        case ErrorCode::GaleDegenerate:
        case ErrorCode::GaleNonReduced:
        case ErrorCode::DuplicatePoint:
          continue;
        default:
          throw;
      }
    }
  }
  throw Error(ErrorCode::RetryBudgetExceeded,
              "no tensor with a fully rational locus after " + std::to_string(retries) + " attempts");
}

}  // namespace galetx
