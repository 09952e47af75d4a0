#pragma once

// Trilinear forms phi in F (x) V (x) W with dim F = r + s, their adjoint
// matrices, the rank-drop loci in P(V) and P(W) over a small prime field, and
// the Veronese Gale duality between the two loci.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "galetx/pointconfig.hpp"

namespace galetx {

class TrilinearForm {
 public:
  // Zero tensor. Requires a prime field and r, s >= 1.
  TrilinearForm(const FieldSpec& field, std::size_t r, std::size_t s);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t s() const noexcept { return s_; }
  std::size_t f() const noexcept { return r_ + s_; }

  // Slice m is an (r+1) x (s+1) matrix.
  Scalar& at(std::size_t m, std::size_t a, std::size_t j) { return entries_[index(m, a, j)]; }
  const Scalar& at(std::size_t m, std::size_t a, std::size_t j) const { return entries_[index(m, a, j)]; }
  ExactMatrix slice(std::size_t m) const;
  void set_slice(std::size_t m, const ExactMatrix& block);

  // Same tensor with the roles of V and W exchanged.
  TrilinearForm transposed() const;

  std::string serialize() const;
  static TrilinearForm parse(std::string_view text);

  friend bool operator==(const TrilinearForm&, const TrilinearForm&) = default;

 private:
  std::size_t index(std::size_t m, std::size_t a, std::size_t j) const {
    return (m * (r_ + 1) + a) * (s_ + 1) + j;
  }

  FieldSpec field_;
  std::size_t r_;
  std::size_t s_;
  std::vector<Scalar> entries_;
};

enum class Side { V, W };

// Side V at x in P^r: (s+1) x f matrix with entries sum_a phi[m][a][j] x_a.
// Side W at y in P^s: (r+1) x f matrix with entries sum_j phi[m][a][j] y_j.
ExactMatrix adjoint_eval(const TrilinearForm& phi, Side side, std::span<const Scalar> point);

inline constexpr std::uint64_t kLocusScanBound = 10'000'000;

// All F_p-points where the adjoint drops rank by exactly one, sorted
// lexicographically on leading-one representatives. Throws SearchTooLarge
// (p^dim above kLocusScanBound), RankTwoDrop(point) and LocusIncomplete when
// the locus is empty.
PointConfiguration determinantal_locus(const TrilinearForm& phi, Side side);

// result[i] = index in gw of the point spanning the left kernel of the side-V
// adjoint at gv[i]. Throws NoMatch / NotBijective.
std::vector<std::size_t> match_pairs(const TrilinearForm& phi, const PointConfiguration& gv,
                                     const PointConfiguration& gw);

struct VeroneseGaleReport {
  std::size_t r;
  std::size_t s;
  std::size_t expected_degree;
  std::size_t locus_v_size;
  std::size_t locus_w_size;
  bool skipped = false;  // r or s equal to 1: the comparison would live in P^0
  Equivalence equivalence = Equivalence::Indeterminate;
  std::vector<std::size_t> matching;
  bool passed() const { return !skipped && equivalence == Equivalence::Equivalent; }
};

// Throws LocusIncomplete when a locus does not have C(r+s, s) rational points.
VeroneseGaleReport verify_veronese_gale(const TrilinearForm& phi);

// A random tensor whose V-locus contains (r+1)(s+1) - (r+s) random planted
// points: each slice is a random bilinear form vanishing on the planted pairs.
TrilinearForm random_planted_tensor(const FieldSpec& field, std::size_t r, std::size_t s,
                                    std::mt19937_64& rng);
TrilinearForm random_tensor(const FieldSpec& field, std::size_t r, std::size_t s,
                            std::mt19937_64& rng);

struct DetnlRun {
  VeroneseGaleReport report;
  TrilinearForm tensor;
  std::size_t attempts;
};

// Samples planted tensors until the full pipeline succeeds; throws
// RetryBudgetExceeded after `retries` failures.
DetnlRun verify_random_tensor(std::size_t r, std::size_t s, std::uint64_t p, std::uint64_t seed,
                              std::size_t retries = 50);

}  // namespace galetx
