#include "galetx/selfassoc.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace galetx {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_string(SelfAssociation::Status s) {
  switch (s) {
    case SelfAssociation::Status::Witness: return "Witness";
    case SelfAssociation::Status::NotSelfAssociated: return "NotSelfAssociated";
    case SelfAssociation::Status::Indeterminate: return "Indeterminate";
  }
  return "?";
}

const char* to_string(Completion::Status s) {
  switch (s) {
    case Completion::Status::Completed: return "Completed";
    case Completion::Status::NotCompletable: return "NotCompletable";
    case Completion::Status::Indeterminate: return "Indeterminate";
  }
  return "?";
}

namespace {

Vector axpy(const Vector& v, const Scalar& c, const Vector& w) {
  Vector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * w[i];
  return out;
}

bool all_nonzero(const std::vector<Vector>& functionals, const Vector& v) {
  for (const auto& f : functionals)
    if (dot(f, v).is_zero()) return false;
  return true;
}

}  // namespace

GenericSearch find_generic_vector(const FieldSpec& field, std::size_t length,
                                  const std::vector<Vector>& basis,
                                  const std::vector<Vector>& functionals,
                                  std::uint64_t scan_limit) {
  // A functional vanishing on every basis vector vanishes on the whole span,
  // over any extension field as well.
  for (const auto& f : functionals) {
    bool somewhere = false;
    for (const auto& b : basis) somewhere = somewhere || !dot(f, b).is_zero();
    if (!somewhere) return {GenericSearch::Status::Impossible, {}};
  }

  // Greedy: keep every functional that is already nonzero nonzero, and turn on
  // the ones that are nonzero on the next basis vector. For each functional at
  // most one coefficient c is bad.
  Vector v = zero_vector(field, length);
  const std::uint64_t c_limit = field.is_rational() ? functionals.size() + 2 : field.modulus() - 1;
  bool greedy_ok = true;
  for (const auto& b : basis) {
    bool placed = false;
    for (std::uint64_t c = 1; c <= c_limit && !placed; ++c) {
      const Vector candidate = axpy(v, Scalar(field, static_cast<long long>(c)), b);
      bool ok = true;
      for (const auto& f : functionals) {
        const bool was_on = !dot(f, v).is_zero() || !dot(f, b).is_zero();
        if (was_on && dot(f, candidate).is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        v = candidate;
        placed = true;
      }
    }
    if (!placed) {
      greedy_ok = false;
      break;
    }
  }
  if (greedy_ok && all_nonzero(functionals, v)) return {GenericSearch::Status::Found, v};

  // Only reachable over small prime fields.
  const std::uint64_t p = field.modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (total > scan_limit / p) return {GenericSearch::Status::Indeterminate, {}};
    total *= p;
  }
  std::vector<std::uint64_t> digits(basis.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::uint64_t rest = n;
    Vector w = zero_vector(field, length);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      digits[i] = rest % p;
      rest /= p;
      if (digits[i]) w = axpy(w, Scalar(field, static_cast<long long>(digits[i])), basis[i]);
    }
    if (all_nonzero(functionals, w)) return {GenericSearch::Status::Found, w};
  }
  return {GenericSearch::Status::Impossible, {}};
}

namespace {

void require_two_r_plus_two(const PointConfiguration& cfg) {
  if (cfg.size() != 2 * cfg.dim() + 2) {
    throw Error(ErrorCode::WrongDegree, "expected 2r+2 = " + std::to_string(2 * cfg.dim() + 2) +
                                            " points, got " + std::to_string(cfg.size()));
  }
}

std::vector<Vector> columns_of(const ExactMatrix& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column_vector(j));
  return out;
}

std::vector<Vector> coordinate_functionals(const FieldSpec& field, std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = zero_vector(field, n);
    e[i] = Scalar::one(field);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

SelfAssociation self_association_witness(const PointConfiguration& cfg) {
  require_two_r_plus_two(cfg);
  if (!is_nondegenerate(cfg)) throw Error(ErrorCode::Degenerate, "configuration does not span");
  // d_i g_i g_i^T summed to zero is the same as a relation among the rows of
  // the quadric evaluation matrix.
  const ExactMatrix relations = kernel_basis(veronese(cfg, 2).coords().transpose());
  const auto search = find_generic_vector(cfg.field(), cfg.size(), columns_of(relations),
                                          coordinate_functionals(cfg.field(), cfg.size()));
  switch (search.status) {
    case GenericSearch::Status::Found:
      return {SelfAssociation::Status::Witness, search.vector};
    case GenericSearch::Status::Impossible:
      return {SelfAssociation::Status::NotSelfAssociated, {}};
    case GenericSearch::Status::Indeterminate:
      break;
  }
  return {SelfAssociation::Status::Indeterminate, {}};
}

bool verify_self_association(const PointConfiguration& cfg, std::span<const Scalar> d) {
  if (d.size() != cfg.size()) return false;
  for (const auto& x : d)
    if (x.is_zero()) return false;
  const ExactMatrix g = cfg.coords();
  return (g.transpose() * ExactMatrix::diagonal(cfg.field(), d) * g).is_zero();
}

Tri is_arithmetically_gorenstein(const PointConfiguration& cfg) {
  const auto sa = self_association_witness(cfg);
  if (sa.status == SelfAssociation::Status::Indeterminate) return Tri::Indeterminate;
  if (sa.status == SelfAssociation::Status::NotSelfAssociated) return Tri::False;
  return quadric_defect(cfg) == 1 ? Tri::True : Tri::False;
}

bool DiagonalBilinearForm::is_nonsingular() const {
  for (const auto& x : diagonal)
    if (x.is_zero()) return false;
  return !diagonal.empty();
}

Scalar DiagonalBilinearForm::apply(std::span<const Scalar> u, std::span<const Scalar> v) const {
  if (u.size() != diagonal.size() || v.size() != diagonal.size()) {
    throw Error(ErrorCode::DimensionMismatch, "form and vector sizes differ");
  }
  Scalar acc = Scalar::zero(diagonal[0].field());
  for (std::size_t i = 0; i < diagonal.size(); ++i) acc += diagonal[i] * u[i] * v[i];
  return acc;
}

namespace {

// Rows of `points` expressed in the basis given by the rows of `basis`.
ExactMatrix in_basis(const ExactMatrix& points, const ExactMatrix& basis) {
  return points * *inverse(basis);
}

// Rows (v_0^2, ..., v_r^2): B(v, v) as a functional of the diagonal of B.
Vector squares(std::span<const Scalar> v) {
  Vector out;
  for (const auto& x : v) out.push_back(x * x);
  return out;
}

// Rows (u_0 v_0, ..., u_r v_r) for all pairs u < v: mutual orthogonality as
// linear conditions on the diagonal of B.
ExactMatrix orthogonality_conditions(const ExactMatrix& vs) {
  const std::size_t n = vs.cols();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < vs.rows(); ++i) {
    for (std::size_t j = i + 1; j < vs.rows(); ++j) {
      Vector row;
      for (std::size_t k = 0; k < n; ++k) row.push_back(vs(i, k) * vs(j, k));
      rows.push_back(std::move(row));
    }
  }
  return ExactMatrix::from_rows(vs.field(), n, rows);
}

}  // namespace

std::optional<DiagonalBilinearForm> orthogonalizing_form(const PointConfiguration& cfg,
                                                         const SubsetSelector& split) {
  require_two_r_plus_two(cfg);
  split.validate(cfg.size());
  const std::size_t r1 = cfg.dim() + 1;
  const SubsetSelector rest = split.complement(cfg.size());
  if (split.size() != r1 || span_rank(cfg, split) != r1 || span_rank(cfg, rest) != r1) {
    throw Error(ErrorCode::NotTwoBases, "split and complement must both be bases");
  }
  const ExactMatrix basis = cfg.coords().select_rows(split.indices());
  const ExactMatrix vs = in_basis(cfg.coords().select_rows(rest.indices()), basis);
  const ExactMatrix solutions = kernel_basis(orthogonality_conditions(vs));
  const auto search = find_generic_vector(cfg.field(), r1, columns_of(solutions),
                                          coordinate_functionals(cfg.field(), r1));
  if (search.status != GenericSearch::Status::Found) return std::nullopt;
  return DiagonalBilinearForm{search.vector};
}

Vector witness_from_form(const PointConfiguration& cfg, const SubsetSelector& split,
                         const DiagonalBilinearForm& form) {
  const SubsetSelector rest = split.complement(cfg.size());
  const ExactMatrix basis = cfg.coords().select_rows(split.indices());
  const ExactMatrix moved = in_basis(cfg.coords(), basis);
  // sum_i e_i e_i^T / b_i = B^{-1} = sum_v v v^T / B(v, v) for any orthogonal
  // basis v of B.
  Vector d(cfg.size());
  for (std::size_t k = 0; k < split.size(); ++k) d[split.indices()[k]] = form.diagonal[k].inverse();
  for (auto j : rest.indices()) {
    const Scalar norm = form.apply(moved.row(j), moved.row(j));
    d[j] = -norm.inverse();
  }
  return d;
}

Completion complete_to_self_associated(const PointConfiguration& cfg, std::uint64_t seed) {
  const std::size_t r1 = cfg.dim() + 1;
  const FieldSpec& field = cfg.field();
  if (cfg.size() <= r1) {
    throw Error(ErrorCode::DimensionMismatch, "completion needs more than r+1 points");
  }
  const ExactMatrix basis = cfg.coords().select_rows(SubsetSelector::range(0, r1).indices());
  if (rank(basis) != r1) throw Error(ErrorCode::FirstBlockNotBasis, "first r+1 points are not a basis");

  const std::size_t d = cfg.size() - r1;
  Completion out{Completion::Status::NotCompletable, std::nullopt, {}, {}};
  // Mutually orthogonal, non-isotropic vectors are independent.
  if (d > r1) return out;

  const ExactMatrix sigma =
      in_basis(cfg.coords().select_rows(SubsetSelector::range(r1, cfg.size()).indices()), basis);
  const ExactMatrix solutions =
      d >= 2 ? kernel_basis(orthogonality_conditions(sigma)) : ExactMatrix::identity(field, r1);
  std::vector<Vector> functionals = coordinate_functionals(field, r1);
  for (std::size_t j = 0; j < d; ++j) functionals.push_back(squares(sigma.row(j)));
  const auto search = find_generic_vector(field, r1, columns_of(solutions), functionals);
  if (search.status == GenericSearch::Status::Impossible) return out;
  if (search.status == GenericSearch::Status::Indeterminate) {
    out.status = Completion::Status::Indeterminate;
    return out;
  }
  const DiagonalBilinearForm form{search.vector};

  // Gram-Schmidt against the current orthogonal family, in moved coordinates.
  std::vector<Vector> family;
  for (std::size_t j = 0; j < d; ++j) family.push_back(sigma.row_vector(j));
  std::vector<Vector> existing;
  const ExactMatrix moved_all = in_basis(cfg.coords(), basis);
  for (std::size_t i = 0; i < moved_all.rows(); ++i) existing.push_back(moved_all.row_vector(i));

  // The seed fixes the order in which standard basis vectors are tried and the
  // random tail of the pool.
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(r1);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> coord(-5, 5);
  std::vector<Vector> added;
  for (std::size_t slot = 0; slot < r1 - d; ++slot) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < 64 && !placed; ++attempt) {
      Vector w = zero_vector(field, r1);
      if (attempt < r1) {
        w[order[attempt]] = Scalar::one(field);
      } else {
        for (auto& x : w) x = Scalar(field, static_cast<long long>(coord(rng)));
      }
      for (const auto& u : family) {
        const Scalar c = form.apply(w, u) / form.apply(u, u);
        w = axpy(w, -c, u);
      }
      if (is_zero_vector(w) || form.apply(w, w).is_zero()) continue;
      bool duplicate = false;
      for (const auto& e : existing) duplicate = duplicate || proportional(e, w);
      if (duplicate) continue;
      family.push_back(w);
      existing.push_back(w);
      added.push_back(std::move(w));
      placed = true;
    }
    if (!placed) {
      throw Error(ErrorCode::IsotropicObstruction,
                  "no usable Gram-Schmidt candidate for slot " + std::to_string(slot));
    }
  }

  ExactMatrix extra = ExactMatrix::from_rows(field, r1, added) * basis;
  out.status = Completion::Status::Completed;
  out.completed = PointConfiguration(field, cfg.dim(), cfg.coords().vstack(extra));
  out.form = form;
  out.added = SubsetSelector::range(cfg.size(), 2 * r1);
  return out;
}

DirectSumReport direct_sum_self_association_check(const PointConfiguration& a,
                                                  const PointConfiguration& b) {
  require_two_r_plus_two(a);
  require_two_r_plus_two(b);
  const PointConfiguration sum = direct_sum(a, b);
  DirectSumReport rep{};
  rep.first = self_association_witness(a).status;
  rep.second = self_association_witness(b).status;
  const auto sum_sa = self_association_witness(sum);
  rep.sum = sum_sa.status;
  rep.first_defect = quadric_defect(a);
  rep.second_defect = quadric_defect(b);
  rep.sum_defect = quadric_defect(sum);
  using S = SelfAssociation::Status;
  const bool any_indeterminate = rep.first == S::Indeterminate || rep.second == S::Indeterminate ||
                                 rep.sum == S::Indeterminate;
  const bool both = rep.first == S::Witness && rep.second == S::Witness;
  rep.consistent = any_indeterminate || (both == (rep.sum == S::Witness));
  if (rep.sum == S::Witness && !verify_self_association(sum, sum_sa.witness)) rep.consistent = false;
  if (rep.sum_defect != rep.first_defect + rep.second_defect) rep.consistent = false;
  return rep;
}

}  // namespace galetx
