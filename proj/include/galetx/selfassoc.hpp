#pragma once

// Self-associated configurations: diagonal witnesses, the arithmetically
// Gorenstein test, orthogonal-basis forms, completion and direct sums.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "galetx/pointconfig.hpp"

namespace galetx {

enum class Tri { True, False, Indeterminate };
const char* to_string(Tri t);

// Search for v in the span of `basis` with dot(f, v) != 0 for every f in
// `functionals`. Over Q a greedy integer combination always succeeds when no
// functional vanishes on the whole span. Over GF(p) the greedy pass is
// followed by an exhaustive scan of spans with at most `scan_limit` vectors.
struct GenericSearch {
  enum class Status { Found, Impossible, Indeterminate };
  Status status;
  Vector vector;  // set iff Found
};
GenericSearch find_generic_vector(const FieldSpec& field, std::size_t length,
                                  const std::vector<Vector>& basis,
                                  const std::vector<Vector>& functionals,
                                  std::uint64_t scan_limit = 1'000'000);

struct SelfAssociation {
  enum class Status { Witness, NotSelfAssociated, Indeterminate };
  Status status;
  Vector witness;  // d with G^T diag(d) G = 0, all entries nonzero; set iff Witness
};
const char* to_string(SelfAssociation::Status s);

// Requires gamma = 2r + 2 (WrongDegree) and a spanning configuration
// (Degenerate).
SelfAssociation self_association_witness(const PointConfiguration& cfg);

// Independent re-check: all entries nonzero and G^T diag(d) G = 0.
bool verify_self_association(const PointConfiguration& cfg, std::span<const Scalar> d);

// True iff self-associated with quadric defect exactly 1.
Tri is_arithmetically_gorenstein(const PointConfiguration& cfg);

struct DiagonalBilinearForm {
  Vector diagonal;

  bool is_nonsingular() const;
  Scalar apply(std::span<const Scalar> u, std::span<const Scalar> v) const;
};

// Diagonal form (in the coordinates where the split points are the standard
// basis) for which both the split and its complement are orthogonal bases.
// Throws NotTwoBases if either block fails to be a basis; nullopt when only
// singular forms exist.
std::optional<DiagonalBilinearForm> orthogonalizing_form(const PointConfiguration& cfg,
                                                         const SubsetSelector& split);

// The witness induced by a form from orthogonalizing_form: 1/B(e_i, e_i) on the
// split, -1/B(v, v) on the complement.
Vector witness_from_form(const PointConfiguration& cfg, const SubsetSelector& split,
                         const DiagonalBilinearForm& form);

struct Completion {
  enum class Status { Completed, NotCompletable, Indeterminate };
  Status status;
  std::optional<PointConfiguration> completed;
  // The form in the coordinates where the first r+1 points are the standard
  // basis.
  DiagonalBilinearForm form;
  SubsetSelector added;
};
const char* to_string(Completion::Status s);

// Extends gamma = r + 1 + d points (first r+1 a basis) to 2r + 2 points whose
// last r + 1 form an orthogonal basis of a diagonal form. The Gram-Schmidt
// candidate pool (standard basis, then seeded small-integer vectors, 64
// attempts per slot) is reproducible from `seed`. Throws FirstBlockNotBasis
// and IsotropicObstruction.
Completion complete_to_self_associated(const PointConfiguration& cfg, std::uint64_t seed);

struct DirectSumReport {
  SelfAssociation::Status first;
  SelfAssociation::Status second;
  SelfAssociation::Status sum;
  std::size_t first_defect;
  std::size_t second_defect;
  std::size_t sum_defect;
  // Sum self-associated iff both summands are, and defects add up.
  bool consistent;
};

DirectSumReport direct_sum_self_association_check(const PointConfiguration& a,
                                                  const PointConfiguration& b);

}  // namespace galetx
