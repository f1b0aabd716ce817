#include "taitkit/flype.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace taitkit {

namespace {

/// Crossings reachable from `start` without visiting `removed` or using the
/// two cut edges.
std::vector<char> reach(const Diagram& d, CrossingId start, CrossingId removed, EdgeId cut1, EdgeId cut2) {
  std::vector<char> seen(d.crossing_count(), 0);
  if (start == removed) return seen;
  std::vector<CrossingId> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const CrossingId c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      const DartId dart = Diagram::dart_at(c, s);
      const EdgeId e = d.edge_of(dart);
      if (e == cut1 || e == cut2) continue;
      const CrossingId other = Diagram::crossing_of(d.partner(dart));
      if (other == removed || seen[other]) continue;
      seen[other] = 1;
      stack.push_back(other);
    }
  }
  return seen;
}

bool touches(const Diagram& d, EdgeId e, CrossingId c) {
  const auto ends = d.edge_darts(e);
  return Diagram::crossing_of(ends[0]) == c || Diagram::crossing_of(ends[1]) == c;
}

std::vector<CrossingId> members(const std::vector<char>& flags) {
  std::vector<CrossingId> out;
  for (CrossingId c = 0; c < static_cast<CrossingId>(flags.size()); ++c)
    if (flags[c]) out.push_back(c);
  return out;
}

}  // namespace

void require_flype_preconditions(const Diagram& d) {
  if (!is_reduced(d)) throw Error(ErrorKind::PreconditionFailed, "diagram is not reduced");
  if (!is_alternating(d)) throw Error(ErrorKind::PreconditionFailed, "diagram is not alternating");
  if (!is_prime_diagram(d)) throw Error(ErrorKind::PreconditionFailed, "diagram is not prime");
}

std::vector<FlypeSite> find_flype_sites(const Diagram& d) {
  require_flype_preconditions(d);
  const RegionMap map = trace_regions(d);
  struct Border {
    EdgeId edge;
    RegionId other;
  };
  std::vector<std::vector<Border>> border(map.regions.size());
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    const auto [a, b] = map.sides_of(d, e);
    border[a].push_back({e, b});
    border[b].push_back({e, a});
  }

  std::set<FlypeSite> sites;
  const int n = d.crossing_count();
  for (CrossingId v = 0; v < n; ++v)
    for (int k = 0; k < 2; ++k) {
      // The circle enters v through corner k and leaves through corner k+2,
      // separating slots {k+1, k+2} from {k+3, k}.
      const RegionId p = map.region_at(v, k);
      const RegionId q = map.region_at(v, k + 2);
      for (const Border& into_s : border[q]) {
        if (touches(d, into_s.edge, v)) continue;
        for (const Border& back_to_p : border[p]) {
          if (back_to_p.other != into_s.other || back_to_p.edge == into_s.edge) continue;
          if (touches(d, back_to_p.edge, v)) continue;
          const EdgeId e1 = std::min(into_s.edge, back_to_p.edge);
          const EdgeId e2 = std::max(into_s.edge, back_to_p.edge);
          auto side_of = [&](int slot) { return Diagram::crossing_of(d.partner(Diagram::dart_at(v, slot))); };
          const auto a = reach(d, side_of(k + 1), v, e1, e2);
          const auto b = reach(d, side_of(k + 3), v, e1, e2);
          if (!a[side_of(k + 1)] || !a[side_of(k + 2)] || !b[side_of(k + 3)] || !b[side_of(k)]) continue;
          bool split = true;
          for (CrossingId c = 0; c < n && split; ++c)
            if (c != v) split = (a[c] != 0) != (b[c] != 0);
          if (!split) continue;
          sites.insert({v, {e1, e2}, members(a)});
          sites.insert({v, {e1, e2}, members(b)});
        }
      }
    }
  return {sites.begin(), sites.end()};
}

bool site_separates(const Diagram& d, const FlypeSite& s) {
  const int n = d.crossing_count();
  if (s.crossing < 0 || s.crossing >= n || s.tangle.empty()) return false;
  if (s.cut_edges[0] < 0 || s.cut_edges[1] >= d.edge_count() || s.cut_edges[0] == s.cut_edges[1]) return false;
  std::vector<char> in_tangle(n, 0);
  for (CrossingId c : s.tangle) {
    if (c < 0 || c >= n || c == s.crossing) return false;
    in_tangle[c] = 1;
  }
  const auto side = reach(d, s.tangle.front(), s.crossing, s.cut_edges[0], s.cut_edges[1]);
  CrossingId outside = -1;
  for (CrossingId c = 0; c < n; ++c) {
    if (c == s.crossing) continue;
    if ((side[c] != 0) != (in_tangle[c] != 0)) return false;
    if (!in_tangle[c] && outside < 0) outside = c;
  }
  if (outside < 0) return false;
  const auto rest = reach(d, outside, s.crossing, s.cut_edges[0], s.cut_edges[1]);
  for (CrossingId c = 0; c < n; ++c)
    if (c != s.crossing && (rest[c] != 0) == (in_tangle[c] != 0)) return false;
  // Each cut edge must join the two sides.
  for (EdgeId e : s.cut_edges) {
    const auto ends = d.edge_darts(e);
    const CrossingId x = Diagram::crossing_of(ends[0]);
    const CrossingId y = Diagram::crossing_of(ends[1]);
    if (x == s.crossing || y == s.crossing || in_tangle[x] == in_tangle[y]) return false;
  }
  return true;
}

FlypeResult apply_flype(const Diagram& d, const FlypeSite& s) {
  if (!site_separates(d, s)) throw Error(ErrorKind::InvalidSite, "flype site does not separate the diagram");
  const int n = d.crossing_count();
  const CrossingId v = s.crossing;
  std::vector<char> in_tangle(n, 0);
  for (CrossingId c : s.tangle) in_tangle[c] = 1;
  auto tangle_side = [&](int slot) { return in_tangle[Diagram::crossing_of(d.partner(Diagram::dart_at(v, slot)))] != 0; };

  // Frame: the tangle lies east of v; slots p, p+1, p+2, p+3 of v point
  // SE, NE, NW, SW.
  int p = -1;
  for (int j = 0; j < 4; ++j)
    if (tangle_side(j) && tangle_side(j + 1) && !tangle_side(j + 2) && !tangle_side(j + 3)) p = j;
  if (p < 0) throw Error(ErrorKind::InvalidSite, "tangle legs at the flype crossing are not adjacent");
  auto at_v = [&](int offset) { return Diagram::dart_at(v, p + offset); };

  const DartId leg_sw = d.partner(at_v(0));
  const DartId leg_nw = d.partner(at_v(1));
  const DartId outer_nw = d.partner(at_v(2));
  const DartId outer_sw = d.partner(at_v(3));

  const RegionMap map = trace_regions(d);
  const RegionId north = map.region_at(v, p + 1);
  const RegionId south = map.region_at(v, p + 3);
  DartId leg_ne = -1, outer_ne = -1, leg_se = -1, outer_se = -1;
  for (EdgeId e : s.cut_edges) {
    const auto ends = d.edge_darts(e);
    const DartId inner = in_tangle[Diagram::crossing_of(ends[0])] ? ends[0] : ends[1];
    const DartId outer = d.partner(inner);
    const auto sides = map.sides_of(d, e);
    const bool borders_north = sides[0] == north || sides[1] == north;
    const bool borders_south = sides[0] == south || sides[1] == south;
    if (borders_north == borders_south) throw Error(ErrorKind::InvalidSite, "cut edge does not bound the flype circle");
    (borders_north ? leg_ne : leg_se) = inner;
    (borders_north ? outer_ne : outer_se) = outer;
  }
  if (leg_ne < 0 || leg_se < 0) throw Error(ErrorKind::InvalidSite, "cut edges do not straddle the flype crossing");

  // Half turn of the tangle: mirror its rotation system, then switch it.
  auto turn = [&](DartId x) {
    const CrossingId c = Diagram::crossing_of(x);
    return in_tangle[c] ? Diagram::dart_at(c, 4 - Diagram::slot_of(x)) : x;
  };

  const MapData& old = d.raw();
  MapData next;
  next.partner.assign(4 * n, -1);
  next.outgoing.assign(4 * n, 0);
  next.over_odd = old.over_odd;
  for (CrossingId c = 0; c < n; ++c)
    if (in_tangle[c]) next.over_odd[c] ^= 1;

  const EdgeId cut_a = s.cut_edges[0];
  const EdgeId cut_b = s.cut_edges[1];
  for (DartId x = 0; x < 4 * n; ++x) {
    if (Diagram::crossing_of(x) == v) continue;
    next.outgoing[turn(x)] = old.outgoing[x];
    const DartId y = d.partner(x);
    const EdgeId e = d.edge_of(x);
    if (Diagram::crossing_of(y) == v || e == cut_a || e == cut_b) continue;
    next.partner[turn(x)] = turn(y);
  }
  auto link = [&](DartId x, DartId y) {
    next.partner[x] = y;
    next.partner[y] = x;
  };
  link(turn(leg_sw), outer_nw);
  link(turn(leg_nw), outer_sw);
  link(turn(leg_se), at_v(2));
  link(turn(leg_ne), at_v(3));
  link(at_v(1), outer_ne);
  link(at_v(0), outer_se);
  next.outgoing[at_v(2)] = d.outgoing(leg_se) ? 0 : 1;
  next.outgoing[at_v(0)] = d.outgoing(leg_se) ? 1 : 0;
  next.outgoing[at_v(3)] = d.outgoing(leg_ne) ? 0 : 1;
  next.outgoing[at_v(1)] = d.outgoing(leg_ne) ? 1 : 0;

  Diagram result = Diagram::from_map(std::move(next));
  FlypeSite inverse{v, {result.edge_of(turn(leg_sw)), result.edge_of(turn(leg_nw))}, s.tangle};
  if (inverse.cut_edges[0] > inverse.cut_edges[1]) std::swap(inverse.cut_edges[0], inverse.cut_edges[1]);
  return {std::move(result), std::move(inverse)};
}

std::string to_json(const FlypeSite& s) {
  nlohmann::ordered_json j;
  j["crossing"] = s.crossing;
  j["cut_edges"] = {s.cut_edges[0], s.cut_edges[1]};
  j["tangle"] = s.tangle;
  return j.dump();
}

}  // namespace taitkit
