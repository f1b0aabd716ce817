#pragma once

#include <array>
#include <string>
#include <vector>

#include "taitkit/diagram.hpp"

namespace taitkit {

/// A flype circle through `crossing` and across the two cut edges, enclosing
/// the crossings of `tangle` (sorted ascending).
struct FlypeSite {
  CrossingId crossing = -1;
  std::array<EdgeId, 2> cut_edges{};  // ascending
  std::vector<CrossingId> tangle;

  friend bool operator==(const FlypeSite&, const FlypeSite&) = default;
  friend auto operator<=>(const FlypeSite&, const FlypeSite&) = default;
};

/// Throws PreconditionFailed naming the first violated predicate among
/// connected (checked at construction), reduced, alternating, prime.
void require_flype_preconditions(const Diagram& d);

/// All nontrivial flype sites, ordered by crossing, then cut edges, then tangle.
std::vector<FlypeSite> find_flype_sites(const Diagram& d);

/// Independent check: deleting the crossing and cutting the two edges splits
/// the projection graph into exactly the tangle and its nonempty complement.
bool site_separates(const Diagram& d, const FlypeSite& s);

struct FlypeResult {
  Diagram diagram;
  /// The site on `diagram` that undoes the move.
  FlypeSite inverse;
};

/// Rotates the tangle half a turn about the flype axis and moves the crossing
/// to the tangle's opposite side. Crossing ids are preserved. Throws InvalidSite.
FlypeResult apply_flype(const Diagram& d, const FlypeSite& s);

std::string to_json(const FlypeSite& s);

}  // namespace taitkit
