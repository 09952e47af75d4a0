#include "galetx/pointconfig.hpp"

#include <algorithm>
#include <numeric>

namespace galetx {

SubsetSelector::SubsetSelector(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(ErrorCode::InvalidSubset, "repeated index in subset");
  }
}

SubsetSelector SubsetSelector::all(std::size_t gamma) { return range(0, gamma); }

SubsetSelector SubsetSelector::range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> idx(end - begin);
  std::iota(idx.begin(), idx.end(), begin);
  return SubsetSelector(std::move(idx));
}

bool SubsetSelector::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

SubsetSelector SubsetSelector::complement(std::size_t gamma) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gamma; ++i)
    if (!contains(i)) out.push_back(i);
  return SubsetSelector(std::move(out));
}

void SubsetSelector::validate(std::size_t gamma) const {
  if (!indices_.empty() && indices_.back() >= gamma) {
    throw Error(ErrorCode::InvalidSubset,
                "index " + std::to_string(indices_.back()) + " out of range for " +
                    std::to_string(gamma) + " points");
  }
}

PointConfiguration::PointConfiguration(const FieldSpec& field, std::size_t r, ExactMatrix coords)
    : r_(r), coords_(std::move(coords)) {
  if (r < 1) throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be at least 1");
  if (!(coords_.field() == field)) throw Error(ErrorCode::FieldMismatch, "coordinate field differs");
  if (coords_.cols() != r + 1) {
    throw Error(ErrorCode::DimensionMismatch,
                "points in P^" + std::to_string(r) + " need " + std::to_string(r + 1) +
                    " coordinates, got " + std::to_string(coords_.cols()));
  }
  if (coords_.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "configuration has no points");
  std::vector<Vector> normalized;
  normalized.reserve(coords_.rows());
  for (std::size_t i = 0; i < coords_.rows(); ++i) {
    if (is_zero_vector(coords_.row(i))) {
      throw Error(ErrorCode::ZeroPoint, "point " + std::to_string(i) + " is zero", {i});
    }
    normalized.push_back(normalize_leading_one(coords_.row(i)));
  }
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    for (std::size_t j = i + 1; j < normalized.size(); ++j) {
      if (normalized[i] == normalized[j]) {
        throw Error(ErrorCode::DuplicatePoint,
                    "points " + std::to_string(i) + " and " + std::to_string(j) +
                        " are proportional",
                    {i, j});
      }
    }
  }
}

PointConfiguration PointConfiguration::from_rows(const FieldSpec& field, std::size_t r,
                                                 const std::vector<Vector>& rows) {
  return PointConfiguration(field, r, ExactMatrix::from_rows(field, r + 1, rows));
}

PointConfiguration PointConfiguration::from_ints(
    const FieldSpec& field, const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::DimensionMismatch, "configuration has no points");
  if (rows[0].size() < 2) throw Error(ErrorCode::DimensionMismatch, "need at least 2 coordinates");
  return PointConfiguration(field, rows[0].size() - 1, ExactMatrix::from_ints(field, rows));
}

bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::size_t span_rank(const PointConfiguration& cfg, const SubsetSelector& s) {
  s.validate(cfg.size());
  if (s.empty()) return 0;
  return rank(cfg.coords().select_rows(s.indices()));
}

bool is_nondegenerate(const PointConfiguration& cfg) {
  return rank(cfg.coords()) == cfg.dim() + 1;
}

bool is_linearly_general_position(const PointConfiguration& cfg) {
  const std::size_t k = std::min(cfg.size(), cfg.dim() + 1);
  return for_each_combination(cfg.size(), k, [&](std::span<const std::size_t> s) {
    return rank(cfg.coords().select_rows(s)) == k;
  });
}

std::vector<std::vector<unsigned>> monomial_exponents(std::size_t n_vars, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(n_vars, 0);
  // Recursive fill: largest power of the earliest variable first.
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t var, unsigned remaining) {
    if (var + 1 == n_vars) {
      e[var] = remaining;
      out.push_back(e);
      return;
    }
    for (unsigned a = remaining + 1; a-- > 0;) {
      e[var] = a;
      fill(var + 1, remaining - a);
    }
  };
  if (n_vars == 0) return out;
  fill(0, d);
  return out;
}

Vector veronese_point(std::span<const Scalar> p, unsigned d) {
  const FieldSpec& field = p[0].field();
  // Power table p[i]^a for a <= d.
  std::vector<Vector> powers(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    powers[i].push_back(Scalar::one(field));
    for (unsigned a = 1; a <= d; ++a) powers[i].push_back(powers[i].back() * p[i]);
  }
  Vector out;
  for (const auto& e : monomial_exponents(p.size(), d)) {
    Scalar m = Scalar::one(field);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m *= powers[i][e[i]];
    out.push_back(std::move(m));
  }
  return out;
}

PointConfiguration veronese(const PointConfiguration& cfg, unsigned d) {
  if (d < 1) throw Error(ErrorCode::DegreeOutOfRange, "Veronese degree must be at least 1");
  const std::size_t n = binomial(cfg.dim() + d, d);
  ExactMatrix m(cfg.field(), cfg.size(), n);
  for (std::size_t i = 0; i < cfg.size(); ++i) m.set_row(i, veronese_point(cfg.point(i), d));
  // Distinct points stay distinct under nu_d; the constructor re-checks.
  return PointConfiguration(cfg.field(), n - 1, std::move(m));
}

std::size_t conditions_imposed(const PointConfiguration& cfg, unsigned d) {
  if (d < 1) throw Error(ErrorCode::DegreeOutOfRange, "degree must be at least 1");
  return rank(veronese(cfg, d).coords());
}

std::size_t quadric_defect(const PointConfiguration& cfg) {
  return cfg.size() - conditions_imposed(cfg, 2);
}

std::size_t forms_vanishing(const PointConfiguration& cfg, const SubsetSelector& s, unsigned d) {
  s.validate(cfg.size());
  const std::size_t total = binomial(cfg.dim() + d, d);
  if (s.empty()) return total;
  if (d == 0) return 0;
  ExactMatrix rows(cfg.field(), s.size(), total);
  for (std::size_t k = 0; k < s.size(); ++k) rows.set_row(k, veronese_point(cfg.point(s.indices()[k]), d));
  return total - rank(rows);
}

namespace {

void check_scan_size(const PointConfiguration& cfg) {
  if (cfg.size() > kMaxSubsetScanPoints) {
    throw Error(ErrorCode::ConfigurationTooLarge,
                std::to_string(cfg.size()) + " points exceed the subset-scan bound of " +
                    std::to_string(kMaxSubsetScanPoints));
  }
}

// The worst subsets for the stability inequality are the point sets of flats:
// every subset S lies in the flat spanned by an independent subset of S with
// the same rank, and that flat has at least |S| points. A depth-first walk over
// independent subsets (in increasing label order) visits every flat of rank
// <= r; along the walk each point keeps its residual modulo the current span,
// so membership is a zero test.
//   semistable: rank * gamma >= m * (r + 1)  for all 1 <= m <= gamma - 1
//   stable:     strict inequality
class StabilityScan {
 public:
  StabilityScan(const PointConfiguration& cfg, bool strict)
      : gamma_(cfg.size()), r1_(cfg.dim() + 1), strict_(strict) {
    residuals_.reserve(gamma_);
    for (std::size_t i = 0; i < gamma_; ++i) residuals_.push_back(cfg.coords().row_vector(i));
  }

  bool run() { return visit(0, 0, residuals_); }

 private:
  bool holds(std::size_t k, std::size_t m) const {
    return strict_ ? k * gamma_ > m * r1_ : k * gamma_ >= m * r1_;
  }

  bool visit(std::size_t next, std::size_t k, const std::vector<Vector>& res) {
    if (k > 0) {
      std::size_t count = 0;
      for (const auto& v : res)
        if (is_zero_vector(v)) ++count;
      if (!holds(k, std::min(count, gamma_ - 1))) return false;
    }
    // Full-rank flats satisfy the bound for every m < gamma.
    if (k + 1 >= r1_) return true;
    for (std::size_t i = next; i < gamma_; ++i) {
      if (is_zero_vector(res[i])) continue;
      const Vector& w = res[i];
      std::size_t pivot = 0;
      while (w[pivot].is_zero()) ++pivot;
      const Scalar inv = w[pivot].inverse();
      std::vector<Vector> reduced = res;
      for (auto& v : reduced) {
        if (v[pivot].is_zero()) continue;
        const Scalar f = v[pivot] * inv;
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * w[c];
      }
      if (!visit(i + 1, k + 1, reduced)) return false;
    }
    return true;
  }

  std::size_t gamma_;
  std::size_t r1_;
  bool strict_;
  std::vector<Vector> residuals_;
};

bool stability_scan(const PointConfiguration& cfg, bool strict) {
  check_scan_size(cfg);
  if (cfg.size() < 2) return true;
  return StabilityScan(cfg, strict).run();
}

}  // namespace

bool is_semistable(const PointConfiguration& cfg) { return stability_scan(cfg, false); }
bool is_stable(const PointConfiguration& cfg) { return stability_scan(cfg, true); }

std::optional<std::pair<SubsetSelector, SubsetSelector>> partition_into_two_bases(
    const PointConfiguration& cfg) {
  const std::size_t r1 = cfg.dim() + 1;
  if (cfg.size() != 2 * r1) {
    throw Error(ErrorCode::WrongDegree, "two-bases split needs gamma = 2r+2 points");
  }
  check_scan_size(cfg);
  std::optional<std::pair<SubsetSelector, SubsetSelector>> found;
  // The lexicographically first split always has its first block containing 0.
  for_each_combination(2 * r1 - 1, r1 - 1, [&](std::span<const std::size_t> rest) {
    std::vector<std::size_t> first{0};
    for (auto i : rest) first.push_back(i + 1);
    SubsetSelector a(first);
    SubsetSelector b = a.complement(cfg.size());
    if (span_rank(cfg, a) == r1 && span_rank(cfg, b) == r1) {
      found.emplace(std::move(a), std::move(b));
      return false;
    }
    return true;
  });
  return found;
}

bool is_frame(const PointConfiguration& cfg, std::span<const std::size_t> subset) {
  const std::size_t r1 = cfg.dim() + 1;
  if (subset.size() != r1 + 1) return false;
  const ExactMatrix basis = cfg.coords().select_rows(subset.first(r1));
  if (rank(basis) != r1) return false;
  // Coefficients of the last point in the basis must all be nonzero.
  auto coeffs = solve(basis.transpose(), ExactMatrix::column(cfg.field(), cfg.point(subset[r1])));
  if (!coeffs) return false;
  for (std::size_t i = 0; i < r1; ++i)
    if ((*coeffs)(i, 0).is_zero()) return false;
  return true;
}

std::optional<std::vector<std::size_t>> first_frame(const PointConfiguration& cfg) {
  std::optional<std::vector<std::size_t>> found;
  for_each_combination(cfg.size(), cfg.dim() + 2, [&](std::span<const std::size_t> s) {
    if (is_frame(cfg, s)) {
      found.emplace(s.begin(), s.end());
      return false;
    }
    return true;
  });
  return found;
}

PointConfiguration normalize_to_frame(const PointConfiguration& cfg,
                                      std::span<const std::size_t> frame) {
  const std::size_t r1 = cfg.dim() + 1;
  if (!is_frame(cfg, frame)) throw Error(ErrorCode::Degenerate, "subset is not a frame");
  const ExactMatrix basis = cfg.coords().select_rows(frame.first(r1));
  const ExactMatrix basis_inv = *inverse(basis);
  // frame[r1] * basis_inv = c; dividing column i by c_i sends the unit point to
  // (1:...:1) and keeps each basis point on its coordinate axis.
  const Vector c = multiply(cfg.point(frame[r1]), basis_inv);
  Vector inv_c;
  for (const auto& ci : c) inv_c.push_back(ci.inverse());
  const ExactMatrix t = basis_inv * ExactMatrix::diagonal(cfg.field(), inv_c);
  const ExactMatrix moved = cfg.coords() * t;
  ExactMatrix out(cfg.field(), cfg.size(), r1);
  for (std::size_t i = 0; i < cfg.size(); ++i) out.set_row(i, normalize_leading_one(moved.row(i)));
  return PointConfiguration(cfg.field(), cfg.dim(), std::move(out));
}

std::optional<PointConfiguration> canonical_form(const PointConfiguration& cfg) {
  auto frame = first_frame(cfg);
  if (!frame) return std::nullopt;
  return normalize_to_frame(cfg, *frame);
}

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent: return "Equivalent";
    case Equivalence::NotEquivalent: return "NotEquivalent";
    case Equivalence::Indeterminate: return "Indeterminate";
  }
  return "?";
}

Equivalence is_equivalent_labeled(const PointConfiguration& a, const PointConfiguration& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim() || a.size() != b.size()) {
    return Equivalence::NotEquivalent;
  }
  std::optional<std::vector<std::size_t>> common;
  for_each_combination(a.size(), a.dim() + 2, [&](std::span<const std::size_t> s) {
    if (is_frame(a, s) && is_frame(b, s)) {
      common.emplace(s.begin(), s.end());
      return false;
    }
    return true;
  });
  if (!common) {
    // A frame in exactly one of the two already separates them.
    if (first_frame(a).has_value() != first_frame(b).has_value()) return Equivalence::NotEquivalent;
    return Equivalence::Indeterminate;
  }
  return normalize_to_frame(a, *common) == normalize_to_frame(b, *common)
             ? Equivalence::Equivalent
             : Equivalence::NotEquivalent;
}

PointConfiguration direct_sum(const PointConfiguration& a, const PointConfiguration& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "direct sum of different fields");
  const std::size_t ca = a.dim() + 1, cb = b.dim() + 1;
  ExactMatrix m(a.field(), a.size() + b.size(), ca + cb);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < ca; ++j) m(i, j) = a.coords()(i, j);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < cb; ++j) m(a.size() + i, ca + j) = b.coords()(i, j);
  return PointConfiguration(a.field(), ca + cb - 1, std::move(m));
}

PointConfiguration permute(const PointConfiguration& cfg, std::span<const std::size_t> perm) {
  if (perm.size() != cfg.size()) throw Error(ErrorCode::DimensionMismatch, "permutation length mismatch");
  return PointConfiguration(cfg.field(), cfg.dim(), cfg.coords().select_rows(perm));
}

PointConfiguration scale_rows(const PointConfiguration& cfg, std::span<const Scalar> factors) {
  if (factors.size() != cfg.size()) throw Error(ErrorCode::DimensionMismatch, "one factor per point required");
  ExactMatrix m = cfg.coords();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (factors[i].is_zero()) throw Error(ErrorCode::DivisionByZero, "row scale factor is zero");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= factors[i];
  }
  return PointConfiguration(cfg.field(), cfg.dim(), std::move(m));
}

PointConfiguration transform_coordinates(const PointConfiguration& cfg, const ExactMatrix& m) {
  return PointConfiguration(cfg.field(), m.cols() - 1, cfg.coords() * m);
}

}  // namespace galetx
