#include "taitkit/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>

namespace taitkit {

namespace {

DartId strand_opposite(DartId d) { return Diagram::dart_at(Diagram::crossing_of(d), Diagram::slot_of(d) + 2); }

int count_faces(const std::vector<DartId>& partner) {
  const int darts = static_cast<int>(partner.size());
  std::vector<char> seen(darts, 0);
  int faces = 0;
  for (DartId start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    ++faces;
    for (DartId d = start; !seen[d];) {
      seen[d] = 1;
      const DartId p = partner[d];
      d = Diagram::dart_at(Diagram::crossing_of(p), Diagram::slot_of(p) + 3);
    }
  }
  return faces;
}

bool crossings_connected(const std::vector<DartId>& partner, int n) {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      const int other = Diagram::crossing_of(partner[Diagram::dart_at(c, s)]);
      if (!seen[other]) {
        seen[other] = 1;
        ++reached;
        stack.push_back(other);
      }
    }
  }
  return reached == n;
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::MalformedCode: return "MalformedCode";
    case ErrorKind::DisconnectedAmbient: return "DisconnectedAmbient";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::NonRealizable: return "NonRealizable";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::NotConnectedDiagram: return "NotConnectedDiagram";
    case ErrorKind::DisconnectedChessboard: return "DisconnectedChessboard";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InvalidSite: return "InvalidSite";
  }
  return "Unknown";
}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& what)
    : Error(ErrorKind::Syntax,
            "syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

SchemaError::SchemaError(std::size_t index, const std::string& what)
    : Error(ErrorKind::Schema, "schema error in entry " + std::to_string(index) + ": " + what), index_(index) {}

Diagram Diagram::from_map(MapData data) {
  const int n = static_cast<int>(data.over_odd.size());
  const int darts = 4 * n;
  if (n == 0) throw Error(ErrorKind::MalformedCode, "a diagram needs at least one crossing");
  if (static_cast<int>(data.partner.size()) != darts || static_cast<int>(data.outgoing.size()) != darts)
    throw Error(ErrorKind::MalformedCode, "dart arrays do not match the crossing count");
  if (!data.dart_label.empty() && static_cast<int>(data.dart_label.size()) != darts)
    throw Error(ErrorKind::MalformedCode, "edge label array does not match the dart count");

  for (DartId d = 0; d < darts; ++d) {
    const DartId p = data.partner[d];
    if (p < 0 || p >= darts || p == d || data.partner[p] != d)
      throw Error(ErrorKind::MalformedCode, "edge pairing is not a fixed-point-free involution");
    if (data.outgoing[d] == data.outgoing[p])
      throw Error(ErrorKind::MalformedCode, "edge orientation is inconsistent at dart " + std::to_string(d));
    if (data.outgoing[d] == data.outgoing[strand_opposite(d)])
      throw Error(ErrorKind::MalformedCode, "strand orientation is inconsistent at dart " + std::to_string(d));
    if (!data.dart_label.empty() && data.dart_label[d] != data.dart_label[p])
      throw Error(ErrorKind::MalformedCode, "edge ends carry different labels");
  }
  if (!crossings_connected(data.partner, n))
    throw Error(ErrorKind::DisconnectedAmbient, "the projection graph is disconnected (split diagram)");
  const int faces = count_faces(data.partner);
  if (faces != n + 2) {
    std::ostringstream os;
    os << "rotation system has " << faces << " faces, a sphere diagram with " << n << " crossings has " << n + 2;
    throw Error(ErrorKind::NonPlanar, os.str());
  }

  Diagram d;
  d.partner_ = data.partner;
  d.over_odd_ = data.over_odd;
  d.outgoing_ = data.outgoing;
  d.data_ = std::move(data);
  d.index_edges_and_components();
  return d;
}

void Diagram::index_edges_and_components() {
  const int darts = dart_count();
  const bool labeled = !data_.dart_label.empty();
  edge_of_.assign(darts, -1);
  components_.clear();

  // Trace components as cycles of tail darts.
  std::vector<std::vector<DartId>> tails;
  std::vector<char> seen(darts, 0);
  for (DartId start = 0; start < darts; ++start) {
    if (!outgoing_[start] || seen[start]) continue;
    std::vector<DartId> cycle;
    for (DartId t = start; !seen[t]; t = strand_opposite(partner_[t])) {
      seen[t] = 1;
      cycle.push_back(t);
    }
    tails.push_back(std::move(cycle));
  }

  if (labeled) {
    for (auto& cycle : tails) {
      auto least = std::min_element(cycle.begin(), cycle.end(),
                                    [&](DartId a, DartId b) { return data_.dart_label[a] < data_.dart_label[b]; });
      std::rotate(cycle.begin(), least, cycle.end());
    }
    std::sort(tails.begin(), tails.end(), [&](const auto& a, const auto& b) {
      return data_.dart_label[a.front()] < data_.dart_label[b.front()];
    });
    std::vector<DartId> all_tails;
    for (const auto& cycle : tails) all_tails.insert(all_tails.end(), cycle.begin(), cycle.end());
    std::sort(all_tails.begin(), all_tails.end(),
              [&](DartId a, DartId b) { return data_.dart_label[a] < data_.dart_label[b]; });
    for (std::size_t i = 1; i < all_tails.size(); ++i)
      if (data_.dart_label[all_tails[i]] == data_.dart_label[all_tails[i - 1]])
        throw Error(ErrorKind::MalformedCode, "edge label used on two edges");
    edge_darts_.clear();
    edge_label_.clear();
    for (DartId t : all_tails) {
      edge_of_[t] = edge_of_[partner_[t]] = static_cast<EdgeId>(edge_darts_.size());
      edge_darts_.push_back({t, partner_[t]});
      edge_label_.push_back(data_.dart_label[t]);
    }
  } else {
    edge_darts_.clear();
    edge_label_.clear();
    for (const auto& cycle : tails)
      for (DartId t : cycle) {
        edge_of_[t] = edge_of_[partner_[t]] = static_cast<EdgeId>(edge_darts_.size());
        edge_darts_.push_back({t, partner_[t]});
        edge_label_.push_back(static_cast<int>(edge_darts_.size()));
      }
  }

  component_of_edge_.assign(edge_darts_.size(), -1);
  for (const auto& cycle : tails) {
    std::vector<EdgeId> edges;
    for (DartId t : cycle) {
      edges.push_back(edge_of_[t]);
      component_of_edge_[edge_of_[t]] = static_cast<int>(components_.size());
    }
    components_.push_back(std::move(edges));
  }
}

std::vector<DartId> Diagram::component_passes(int component) const {
  std::vector<DartId> passes;
  for (EdgeId e : components_.at(component)) passes.push_back(edge_darts_[e][1]);
  return passes;
}

Diagram Diagram::with_reversed_components(std::span<const int> components) const {
  MapData data = data_;
  for (int c : components)
    for (EdgeId e : components_.at(c))
      for (DartId d : edge_darts_[e]) data.outgoing[d] ^= 1;
  return from_map(std::move(data));
}

Diagram Diagram::with_all_reversed() const {
  std::vector<int> all(components_.size());
  std::iota(all.begin(), all.end(), 0);
  return with_reversed_components(all);
}

Diagram Diagram::mirrored() const {
  MapData data = data_;
  for (auto& flag : data.over_odd) flag ^= 1;
  return from_map(std::move(data));
}

Diagram build_from_crossing_list(std::span<const PdTuple> pd) {
  const int n = static_cast<int>(pd.size());
  if (n == 0) throw Error(ErrorKind::MalformedCode, "empty crossing list");

  std::map<int, std::vector<DartId>> by_label;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      const int label = pd[c][s];
      if (label <= 0) throw Error(ErrorKind::MalformedCode, "edge labels must be positive integers");
      by_label[label].push_back(Diagram::dart_at(c, s));
    }
  for (const auto& [label, darts] : by_label)
    if (darts.size() != 2)
      throw Error(ErrorKind::MalformedCode,
                  "label " + std::to_string(label) + " appears " + std::to_string(darts.size()) + " times, expected 2");

  MapData data;
  data.partner.assign(4 * n, -1);
  data.dart_label.assign(4 * n, 0);
  for (const auto& [label, darts] : by_label) {
    data.partner[darts[0]] = darts[1];
    data.partner[darts[1]] = darts[0];
    data.dart_label[darts[0]] = data.dart_label[darts[1]] = label;
  }
  data.over_odd.assign(n, 1);
  data.outgoing.assign(4 * n, 0);

  // Default orientation: start each component at its least label and move
  // toward the smaller neighbouring label. Two-edge components fall back to
  // the PD convention (slot 0 incoming, slot 2 outgoing).
  std::vector<char> done(4 * n, 0);
  for (const auto& [label, darts] : by_label) {
    const DartId x = darts[0];
    const DartId y = darts[1];
    if (done[x]) continue;
    const int next_if_x_tail = data.dart_label[strand_opposite(y)];
    const int next_if_y_tail = data.dart_label[strand_opposite(x)];
    bool x_is_tail;
    if (next_if_x_tail != next_if_y_tail) {
      x_is_tail = next_if_x_tail < next_if_y_tail;
    } else if (Diagram::slot_of(y) == 0 || Diagram::slot_of(x) == 2) {
      x_is_tail = true;
    } else if (Diagram::slot_of(x) == 0 || Diagram::slot_of(y) == 2) {
      x_is_tail = false;
    } else {
      x_is_tail = y < x;
    }
    for (DartId t = x_is_tail ? x : y; !done[t]; t = strand_opposite(data.partner[t])) {
      done[t] = done[data.partner[t]] = 1;
      data.outgoing[t] = 1;
      data.outgoing[data.partner[t]] = 0;
    }
  }

  // The walk above may leave the strand partner of a pass unmarked only when
  // the input is inconsistent; from_map rejects that case.
  return Diagram::from_map(std::move(data));
}

std::array<RegionId, 2> RegionMap::sides_of(const Diagram& d, EdgeId e) const {
  const DartId t = d.edge_darts(e)[0];
  return {region_of_corner[t],
          region_of_corner[Diagram::dart_at(Diagram::crossing_of(t), Diagram::slot_of(t) + 3)]};
}

RegionMap trace_regions(const Diagram& d) {
  RegionMap map;
  map.region_of_corner.assign(d.dart_count(), -1);
  for (DartId start = 0; start < d.dart_count(); ++start) {
    if (map.region_of_corner[start] >= 0) continue;
    Region region{static_cast<RegionId>(map.regions.size()), {}, Color::Uncolored};
    for (DartId c = start; map.region_of_corner[c] < 0; c = d.face_next(c)) {
      map.region_of_corner[c] = region.id;
      region.boundary.push_back(c);
    }
    map.regions.push_back(std::move(region));
  }
  return map;
}

int Coloring::count(Color c) const { return static_cast<int>(std::count(color.begin(), color.end(), c)); }

std::vector<RegionId> Coloring::regions_of(Color c) const {
  std::vector<RegionId> out;
  for (RegionId r = 0; r < static_cast<RegionId>(color.size()); ++r)
    if (color[r] == c) out.push_back(r);
  return out;
}

Coloring color_chessboard(const Diagram& d) {
  Coloring coloring;
  coloring.map = trace_regions(d);
  const int regions = static_cast<int>(coloring.map.regions.size());
  std::vector<std::vector<RegionId>> adjacent(regions);
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    const auto [a, b] = coloring.map.sides_of(d, e);
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  coloring.color.assign(regions, Color::Uncolored);
  const RegionId anchor = coloring.map.region_of_corner[0];
  coloring.color[anchor] = Color::Black;
  std::queue<RegionId> queue;
  queue.push(anchor);
  while (!queue.empty()) {
    const RegionId r = queue.front();
    queue.pop();
    for (RegionId s : adjacent[r]) {
      if (coloring.color[s] == Color::Uncolored) {
        coloring.color[s] = opposite(coloring.color[r]);
        queue.push(s);
      } else if (coloring.color[s] == coloring.color[r]) {
        throw Error(ErrorKind::NotBipartite, "regions sharing an edge received the same color");
      }
    }
  }
  for (auto& region : coloring.map.regions) region.color = coloring.color[region.id];
  return coloring;
}

bool is_alternating(const Diagram& d) {
  for (int comp = 0; comp < static_cast<int>(d.components().size()); ++comp) {
    const auto passes = d.component_passes(comp);
    for (std::size_t i = 0; i < passes.size(); ++i)
      if (d.is_over(passes[i]) == d.is_over(passes[(i + 1) % passes.size()])) return false;
  }
  return true;
}

bool is_reduced(const Diagram& d) {
  const RegionMap map = trace_regions(d);
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    std::array<RegionId, 4> corners{};
    for (int k = 0; k < 4; ++k) corners[k] = map.region_at(c, k);
    std::sort(corners.begin(), corners.end());
    if (std::adjacent_find(corners.begin(), corners.end()) != corners.end()) return false;
  }
  return true;
}

bool is_prime_diagram(const Diagram& d) {
  const int n = d.crossing_count();
  const int edges = d.edge_count();
  for (EdgeId e1 = 0; e1 < edges; ++e1)
    for (EdgeId e2 = e1 + 1; e2 < edges; ++e2) {
      std::vector<char> seen(n, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
          const DartId dart = Diagram::dart_at(c, s);
          const EdgeId e = d.edge_of(dart);
          if (e == e1 || e == e2) continue;
          const int other = Diagram::crossing_of(d.partner(dart));
          if (!seen[other]) {
            seen[other] = 1;
            ++reached;
            stack.push_back(other);
          }
        }
      }
      if (reached < n) return false;
    }
  return true;
}

std::vector<int> crossing_signs(const Diagram& d) {
  std::vector<int> signs(d.crossing_count());
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    const int under_base = d.over_odd(c) ? 0 : 1;
    const DartId u = Diagram::dart_at(c, under_base);
    const int under_in = d.outgoing(u) ? under_base + 2 : under_base;
    const DartId o = Diagram::dart_at(c, under_base + 1);
    const int over_in = d.outgoing(o) ? under_base + 3 : under_base + 1;
    signs[c] = (over_in % 4 == (under_in + 3) % 4) ? +1 : -1;
  }
  return signs;
}

int writhe(const Diagram& d) {
  const auto signs = crossing_signs(d);
  return std::accumulate(signs.begin(), signs.end(), 0);
}

}  // namespace taitkit
