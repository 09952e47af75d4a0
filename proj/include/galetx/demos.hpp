#pragma once

// Worked scenarios: six points on a conic, seven points of P^3 and their
// eighth base point, and the completion of eleven points of P^6.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galetx/pointconfig.hpp"
#include "galetx/selfassoc.hpp"

namespace galetx {

// The sextuple (1, t, t^2), t = 0..4, plus (0, 0, 1).
PointConfiguration pascal_sextuple(const FieldSpec& field);
// e0, e1, e2, (1,2,2), (2,1,-2), (2,-2,1): two orthogonal bases of the
// identity form.
PointConfiguration two_orthogonal_bases_sextuple(const FieldSpec& field);

struct PascalReport {
  PointConfiguration cfg;
  SelfAssociation witness;
  bool witness_verified;
  std::size_t quadric_defect;
  Tri gorenstein;
  Equivalence gale_equivalence;  // cfg against its own Gale transform
};
PascalReport demo_pascal(const FieldSpec& field);

struct SevenPointAnalysis {
  enum class Kind { CompleteIntersection, CurveBaseLocus, Degenerate };
  Kind kind;
  std::size_t base_locus_points;  // F_p-rational common zeros of the net
  std::optional<Vector> eighth_point;
  std::optional<PointConfiguration> projection;
  Equivalence equivalence = Equivalence::Indeterminate;
};
const char* to_string(SevenPointAnalysis::Kind k);

// Seven points of P^3 over GF(p): the net of quadrics through them, its
// rational base locus by exhaustive search, and (when it is eight points)
// the projection from the eighth point compared with the Gale transform.
SevenPointAnalysis analyze_seven_points(const PointConfiguration& cfg);

struct SevenPointReport {
  std::uint64_t seed;
  std::uint64_t p;
  std::size_t attempts;
  PointConfiguration points;
  SevenPointAnalysis analysis;
  bool passed() const {
    return analysis.kind == SevenPointAnalysis::Kind::CompleteIntersection &&
           analysis.equivalence == Equivalence::Equivalent;
  }
};

// Throws InvalidField unless p >= 101 and RetryBudgetExceeded after
// `retries` unusable samples.
SevenPointReport demo_seven_p3(std::uint64_t seed, std::uint64_t p, std::size_t retries = 50);
// Seven random points on a twisted cubic: the net's base locus is the curve.
SevenPointReport demo_seven_p3_on_twisted_cubic(std::uint64_t seed, std::uint64_t p);

struct ElevenPointReport {
  PointConfiguration points;
  std::vector<Completion> completions;
  std::vector<ExactMatrix> added_spans;  // rref of the added points, per seed
  bool all_self_associated;
  bool same_plane;
};
// Eleven random points of P^6 over Q completed with each of the given seeds.
ElevenPointReport demo_eleven_p6(std::uint64_t seed, const std::vector<std::uint64_t>& completion_seeds);

}  // namespace galetx
