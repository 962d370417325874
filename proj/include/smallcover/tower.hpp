#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smallcover/polytope.hpp"
#include "smallcover/small_cover.hpp"

namespace smallcover {

/// Result of gluing two copies of a 3-polytope along a facet. `origin[f]`
/// is the facet of the input whose color new facet f inherits.
struct Doubling {
  Polytope polytope;
  std::vector<FacetId> origin;
};

/**
 * Reflects p across `face`: two copies are glued along it, the facet is
 * deleted from both, each pair of neighbours across an edge of the facet
 * merges into one facet, and the old vertices of the facet (now of degree
 * two) are suppressed.
 *
 * Facet numbering: the first copy keeps its order with `face` removed
 * (merged facets sit where the first copy's neighbour was), then the
 * untouched facets of the mirror copy follow in their original order.
 * Mirror facets are stored with reversed cycles.
 */
Doubling double_with_origin(const Polytope& p, FacetId face);

/// double_with_origin(p, face).polytope. With k = |face|:
/// V' = 2V - 2k, E' = 2E - 3k, F' = 2F - 2 - k.
Polytope double_along(const Polytope& p, FacetId face);

/// Color of each facet of double_along(p, face), inherited from its origin.
Coloring propagate_coloring(const Polytope& p, const Coloring& c, FacetId face);

/// Face-choice policy for the next doubling.
struct Strategy {
  enum class Kind { min_vertex_face, round_robin, explicit_list };
  Kind kind = Kind::min_vertex_face;
  std::vector<FacetId> faces;  ///< explicit_list only: face for level j at index j

  /// "min-face" (alias "min-vertex-face"), "round-robin", "list:3,0,5".
  static Strategy parse(std::string_view text);
  std::string name() const;

  /// Facet to double at level j, or nullopt when the policy has no choice
  /// (explicit list exhausted). min-vertex-face breaks ties by smallest id;
  /// round-robin picks j mod F.
  std::optional<FacetId> choose(const Polytope& p, int level) const;
};

struct TowerLevel {
  Polytope polytope;
  std::optional<FacetId> doubling_face;  ///< facet producing the next level
  int k = 0;                             ///< vertex count of doubling_face, 0 if none
  std::uint64_t index_over_base = 1;     ///< 2^j
  Coloring coloring;
};

struct TowerState {
  std::vector<TowerLevel> levels;
  Strategy strategy;
};

/// Levels 0..depth. The doubling face is recorded at every level the policy
/// defines one, the last level included, so the k-sequence covers all rows.
TowerState build_tower(const Polytope& p, const Coloring& c, const Strategy& strategy, int depth);

}  // namespace smallcover
