#pragma once

// Catalog of the quantitative claims the scenario runner checks. Each claim
// has a stable id (used in reports and by the coverage lint) and a one-line
// statement of what is being asserted, in the library's own vocabulary.

#include <string>
#include <vector>

#include "sym/errors.hpp"

namespace sym {

struct Claim {
  std::string id;
  std::string statement;
};

inline const std::vector<Claim>& claim_catalog() {
  static const std::vector<Claim> catalog = {
      {"mean-chain-nesting",
       "The four symmetrizations are nested, the forward gauge chain "
       "max <= arithmetic <= harmonic <= minimum holds pointwise, and the "
       "reverse chain min <= (s+1)/2 * arithmetic <= s * max holds for "
       "Minkowski-centered bodies."},
      {"equivalence-two-sided",
       "For every positioned pair, the minimum is optimally contained in the "
       "maximum exactly when the harmonic mean is optimally contained in the "
       "arithmetic mean."},
      {"simplex-mean-factors",
       "Simplices in even dimension need shrink factors n/(n+1) and "
       "n(n+2)/(n+1)^2 to restore optimality of the inner symmetrizations; in "
       "odd dimension the chain is optimal with no shrinking."},
      {"reverse-factor-table",
       "The six reverse containments between the four symmetrizations hold "
       "and are optimal at the factors s, 2s/(s+1), 2s/(s+1), (s+1)/2, "
       "(s+1)/2, with the sixth bounded by (s+1)/2 but not always optimal."},
      {"golden-house-threshold",
       "The house bodies realize the asymmetry threshold "
       "(n-1+sqrt(n^2-2n+5))/2 in Minkowski-centered position with an optimal "
       "symmetrization chain and a parallel-support witness."},
      {"near-simplex-stability",
       "Close to the simplex asymmetry, the inner-mean factors are bounded by "
       "the correction factors psi*n/(n+1) and mu*psi*n(n+2)/(n+1)^2, both of "
       "which equal 1 at s = n and cross 1 downward at their thresholds."},
      {"attaining-family-formulas",
       "The attaining families match their closed forms: caps give alpha = "
       "2/(s+1), pentagons give alpha = s/(s^2-1), hexagons give beta = "
       "4s/(s+1)^2, and the five-vertex family follows the two-regime beta "
       "formula; measured values stay inside the admissible region."},
      {"kgon-omega-optimal",
       "Odd regular polygons make the outer factor (s+1)/2 tight for covering "
       "the arithmetic mean by the scaled harmonic mean."},
      {"omega-not-universally-optimal",
       "The corner-trimmed hexagon keeps its asymmetry but needs strictly "
       "less than (s+1)/2 to cover its arithmetic mean by the scaled harmonic "
       "mean, while respecting the universal lower bound (s+1)^2/(4s)."},
      {"descent-preserves-equivalence",
       "Reducing asymmetry through the certificate-based construction hits "
       "the requested asymmetry exactly and keeps both sides of the "
       "optimality equivalence true."},
      {"polar-swap-optimality",
       "Optimal containment between 0-symmetric bodies is preserved when "
       "both bodies are replaced by their polars in swapped roles."},
      {"diameter-identities",
       "Directional diameters agree across symmetrization: D_max(K,C) equals "
       "D(K, C meet -C) and D(K,C) equals D(K, (C-C)/2)."},
      {"seeded-corpus-invariants",
       "On a seeded random corpus: vertex/halfspace round-trips and the "
       "bipolar identity hold, reverse factors match and are optimal, the "
       "equivalence booleans agree, and containment certificates re-validate "
       "by independent arithmetic."},
  };
  return catalog;
}

inline const Claim& find_claim(const std::string& id) {
  for (const auto& c : claim_catalog())
    if (c.id == id) return c;
  throw UnknownScenario("no claim with id: " + id);
}

}  // namespace sym
