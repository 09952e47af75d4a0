#pragma once

// Labeled point configurations in P^r: validation, Veronese maps, position
// and stability predicates, frame normalization and direct sums.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "galetx/exactla.hpp"

namespace galetx {

// Subset scans (stability, two-bases splits) refuse configurations larger than
// this.
inline constexpr std::size_t kMaxSubsetScanPoints = 20;

// Sorted, distinct point labels.
class SubsetSelector {
 public:
  SubsetSelector() = default;
  // Sorts and deduplicates-rejects: throws InvalidSubset on repeats.
  explicit SubsetSelector(std::vector<std::size_t> indices);
  static SubsetSelector all(std::size_t gamma);
  static SubsetSelector range(std::size_t begin, std::size_t end);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t i) const;
  SubsetSelector complement(std::size_t gamma) const;
  // Throws InvalidSubset if any index is >= gamma.
  void validate(std::size_t gamma) const;

  friend bool operator==(const SubsetSelector&, const SubsetSelector&) = default;

 private:
  std::vector<std::size_t> indices_;
};

class PointConfiguration {
 public:
  // Throws DimensionMismatch, ZeroPoint(i) or DuplicatePoint(i, j).
  PointConfiguration(const FieldSpec& field, std::size_t r, ExactMatrix coords);
  static PointConfiguration from_rows(const FieldSpec& field, std::size_t r,
                                      const std::vector<Vector>& rows);
  static PointConfiguration from_ints(const FieldSpec& field,
                                      const std::vector<std::vector<long long>>& rows);

  const FieldSpec& field() const noexcept { return coords_.field(); }
  // Ambient projective dimension.
  std::size_t dim() const noexcept { return r_; }
  std::size_t size() const noexcept { return coords_.rows(); }
  const ExactMatrix& coords() const noexcept { return coords_; }
  std::span<const Scalar> point(std::size_t i) const { return coords_.row(i); }

  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

 private:
  std::size_t r_;
  ExactMatrix coords_;
};

// Calls fn with each k-subset of {0..n-1} in lexicographic order; stops when fn
// returns false. Returns false iff stopped early.
bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& fn);

std::size_t binomial(std::size_t n, std::size_t k);

std::size_t span_rank(const PointConfiguration& cfg, const SubsetSelector& s);
bool is_nondegenerate(const PointConfiguration& cfg);
bool is_linearly_general_position(const PointConfiguration& cfg);

// Exponent vectors of degree d in n variables, graded lexicographic order
// (x0^d first).
std::vector<std::vector<unsigned>> monomial_exponents(std::size_t n_vars, unsigned d);
Vector veronese_point(std::span<const Scalar> p, unsigned d);
PointConfiguration veronese(const PointConfiguration& cfg, unsigned d);

std::size_t conditions_imposed(const PointConfiguration& cfg, unsigned d);
std::size_t quadric_defect(const PointConfiguration& cfg);
std::size_t forms_vanishing(const PointConfiguration& cfg, const SubsetSelector& s,
                            unsigned d);

// Both throw ConfigurationTooLarge above kMaxSubsetScanPoints.
bool is_semistable(const PointConfiguration& cfg);
bool is_stable(const PointConfiguration& cfg);

// Lexicographically first split into two complementary bases. Requires
// gamma = 2r + 2 (WrongDegree otherwise).
std::optional<std::pair<SubsetSelector, SubsetSelector>> partition_into_two_bases(
    const PointConfiguration& cfg);

bool is_frame(const PointConfiguration& cfg, std::span<const std::size_t> subset);
std::optional<std::vector<std::size_t>> first_frame(const PointConfiguration& cfg);
// Sends the given frame to e_0, ..., e_r, (1:...:1) and scales every row to a
// leading 1.
PointConfiguration normalize_to_frame(const PointConfiguration& cfg,
                                      std::span<const std::size_t> frame);
std::optional<PointConfiguration> canonical_form(const PointConfiguration& cfg);

enum class Equivalence { Equivalent, NotEquivalent, Indeterminate };
const char* to_string(Equivalence e);
Equivalence is_equivalent_labeled(const PointConfiguration& a, const PointConfiguration& b);

PointConfiguration direct_sum(const PointConfiguration& a, const PointConfiguration& b);

// Row i of the result is row perm[i] of cfg.
PointConfiguration permute(const PointConfiguration& cfg, std::span<const std::size_t> perm);
PointConfiguration scale_rows(const PointConfiguration& cfg, std::span<const Scalar> factors);
// Applies the column transformation coords * m (m invertible, (r+1)x(r+1)).
PointConfiguration transform_coordinates(const PointConfiguration& cfg, const ExactMatrix& m);

}  // namespace galetx
