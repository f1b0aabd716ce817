#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "taitkit/error.hpp"

namespace taitkit {

using CrossingId = int;
using DartId = int;
using EdgeId = int;
using RegionId = int;

/// One PD tuple: edge labels at slots 0..3, counterclockwise, slot 0 being
/// the incoming understrand.
using PdTuple = std::array<int, 4>;

/// Half-edge of the 4-valent projection graph. Dart ids are 4 * crossing + slot.
struct Dart {
  DartId id;
  CrossingId crossing;
  int slot;
  DartId partner;
};

/// Raw combinatorial data from which a Diagram is validated and built.
///
/// partner is the edge involution on darts. over_odd[c] is 1 when slots 1-3
/// carry the overstrand at crossing c and 0 when slots 0-2 do. outgoing[d] is
/// 1 when the oriented strand leaves crossing(d) through d.
struct MapData {
  std::vector<DartId> partner;
  std::vector<std::uint8_t> over_odd;
  std::vector<std::uint8_t> outgoing;
  /// Optional user-facing edge labels per dart; both ends of an edge carry
  /// the same label. Empty means "number edges along the components".
  std::vector<int> dart_label;
};

/// A connected link diagram on the oriented sphere, stored as a rotation
/// system. Immutable once built.
class Diagram {
 public:
  /// Validates the map: fixed-point-free involution, one outgoing end per
  /// edge and per strand pass, connected, and genus zero.
  static Diagram from_map(MapData data);

  int crossing_count() const noexcept { return static_cast<int>(over_odd_.size()); }
  int dart_count() const noexcept { return static_cast<int>(partner_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edge_darts_.size()); }

  static CrossingId crossing_of(DartId d) noexcept { return d / 4; }
  static int slot_of(DartId d) noexcept { return d % 4; }
  static DartId dart_at(CrossingId c, int slot) noexcept { return 4 * c + ((slot % 4) + 4) % 4; }

  Dart dart(DartId d) const { return {d, crossing_of(d), slot_of(d), partner_[d]}; }
  DartId partner(DartId d) const { return partner_[d]; }
  bool over_odd(CrossingId c) const { return over_odd_[c] != 0; }
  bool is_over(DartId d) const { return (slot_of(d) % 2 == 1) == over_odd(crossing_of(d)); }
  bool outgoing(DartId d) const { return outgoing_[d] != 0; }

  EdgeId edge_of(DartId d) const { return edge_of_[d]; }
  /// (tail dart, head dart) of the oriented edge.
  std::array<DartId, 2> edge_darts(EdgeId e) const { return edge_darts_[e]; }
  int edge_label(EdgeId e) const { return edge_label_[e]; }

  /// Components as sequences of edges in traversal order.
  const std::vector<std::vector<EdgeId>>& components() const noexcept { return components_; }
  int component_of_edge(EdgeId e) const { return component_of_edge_[e]; }

  /// The dart following d around the face on its left.
  DartId face_next(DartId d) const { return dart_at(crossing_of(partner_[d]), slot_of(partner_[d]) + 3); }

  /// The crossing-pass sequence of a component: incoming darts in order.
  std::vector<DartId> component_passes(int component) const;

  /// Same projection and crossings with the orientation of the listed
  /// components reversed.
  Diagram with_reversed_components(std::span<const int> components) const;
  Diagram with_all_reversed() const;
  /// Every crossing switched.
  Diagram mirrored() const;

  const MapData& raw() const noexcept { return data_; }

 private:
  Diagram() = default;
  void index_edges_and_components();

  MapData data_;
  std::vector<DartId> partner_;
  std::vector<std::uint8_t> over_odd_;
  std::vector<std::uint8_t> outgoing_;
  std::vector<EdgeId> edge_of_;
  std::vector<std::array<DartId, 2>> edge_darts_;
  std::vector<int> edge_label_;
  std::vector<std::vector<EdgeId>> components_;
  std::vector<int> component_of_edge_;
};

enum class Color : std::uint8_t { Black, White, Uncolored };

constexpr Color opposite(Color c) noexcept {
  return c == Color::Black ? Color::White : (c == Color::White ? Color::Black : Color::Uncolored);
}

struct Region {
  RegionId id;
  /// Face trace: each dart d stands for the corner between slots d and d+1.
  std::vector<DartId> boundary;
  Color color = Color::Uncolored;
};

/// Regions of the diagram plus a lookup from corners (identified with darts)
/// to regions.
struct RegionMap {
  std::vector<Region> regions;
  std::vector<RegionId> region_of_corner;

  RegionId region_at(CrossingId c, int corner) const { return region_of_corner[Diagram::dart_at(c, corner)]; }
  /// The two regions on either side of an edge.
  std::array<RegionId, 2> sides_of(const Diagram& d, EdgeId e) const;
};

struct Coloring {
  RegionMap map;
  std::vector<Color> color;  // per region

  int count(Color c) const;
  std::vector<RegionId> regions_of(Color c) const;
};

/// Builds from PD tuples with the default orientation rule.
Diagram build_from_crossing_list(std::span<const PdTuple> pd);

RegionMap trace_regions(const Diagram& d);
Coloring color_chessboard(const Diagram& d);

bool is_alternating(const Diagram& d);
bool is_reduced(const Diagram& d);
bool is_prime_diagram(const Diagram& d);

/// +1 or -1 per crossing by the right-hand rule.
std::vector<int> crossing_signs(const Diagram& d);
int writhe(const Diagram& d);

}  // namespace taitkit
