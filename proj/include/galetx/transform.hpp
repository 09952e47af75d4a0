#pragma once

// The Gale transform of a labeled point configuration and the rank duality it
// satisfies.

#include <cstddef>

#include "galetx/pointconfig.hpp"

namespace galetx {

struct GaleResult {
  PointConfiguration source;
  // gamma points in P^s, s = gamma - r - 2. Row i is the image of source row i.
  PointConfiguration transform;
  // Diagonal of D in G^T D G' = 0; always all ones here.
  Vector witness;
};

// Kernel of G^T as a gamma x (s+1) matrix, without the point-configuration
// checks on its rows. Requires gamma >= r + 3 and a spanning source.
ExactMatrix gale_matrix(const PointConfiguration& cfg);

// Requires gamma >= r + 3 and a spanning source. Throws Degenerate,
// GaleDegenerate(i) when a kernel row vanishes (a hyperplane contains every
// point but i) and GaleNonReduced(i, j) when two kernel rows are proportional
// (a hyperplane contains every point but i and j).
GaleResult gale_transform(const PointConfiguration& cfg);

// Checks G^T diag(d) G' = 0 by direct multiplication.
bool verify_gale_pair(const PointConfiguration& g, const PointConfiguration& g_prime,
                      std::span<const Scalar> d);

// No hyperplane contains all but one (resp. all but two) of the points,
// tested over the configuration's own field.
bool gale_is_basepoint_free(const PointConfiguration& cfg);
bool gale_is_very_ample(const PointConfiguration& cfg);

struct DualityDefects {
  std::size_t span_failure;
  std::size_t condition_failure;
};

// Failure of the selected points to span, next to the failure of the Gale
// images of the complementary points to impose independent conditions on
// hyperplanes. The configuration overload works on the raw Gale matrix, so it
// also covers sources whose transform has proportional rows.
DualityDefects duality_defects(const PointConfiguration& cfg, const SubsetSelector& s);
DualityDefects duality_defects(const GaleResult& gale, const SubsetSelector& s);

}  // namespace galetx
