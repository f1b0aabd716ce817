#include "taitkit/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "taitkit/codecs.hpp"
#include "taitkit/parallel.hpp"

namespace taitkit {

std::string CanonicalCode::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
  return os.str();
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : c.values) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
  return h;
}

CanonicalCode traversal_code(const Diagram& d, DartId start) {
  const int n = d.crossing_count();
  std::vector<int> label(n, -1), base(n, 0);
  std::vector<CrossingId> order;
  order.reserve(n);
  const CrossingId first = Diagram::crossing_of(start);
  label[first] = 0;
  base[first] = Diagram::slot_of(start);
  order.push_back(first);

  CanonicalCode code;
  code.values.reserve(1 + 9 * n);
  code.values.push_back(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const CrossingId c = order[i];
    code.values.push_back(((d.over_odd(c) ? 1 : 0) + base[c]) % 2);
    for (int j = 0; j < 4; ++j) {
      const DartId p = d.partner(Diagram::dart_at(c, base[c] + j));
      const CrossingId pc = Diagram::crossing_of(p);
      if (label[pc] < 0) {
        label[pc] = static_cast<int>(order.size());
        base[pc] = Diagram::slot_of(p);
        order.push_back(pc);
      }
      code.values.push_back(label[pc]);
      code.values.push_back(((Diagram::slot_of(p) - base[pc]) % 4 + 4) % 4);
    }
  }
  return code;
}

CanonicalCode canonical_code(const Diagram& d) {
  CanonicalCode best = traversal_code(d, 0);
  for (DartId s = 1; s < d.dart_count(); ++s) {
    CanonicalCode c = traversal_code(d, s);
    if (c < best) best = std::move(c);
  }
  return best;
}

std::size_t OrbitReport::find(const CanonicalCode& code) const {
  auto it = std::lower_bound(members.begin(), members.end(), code,
                             [](const OrbitMember& m, const CanonicalCode& c) { return m.code < c; });
  if (it == members.end() || it->code != code) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - members.begin());
}

namespace {

struct Successor {
  FlypeSite site;
  Diagram diagram;
  CanonicalCode code;
};

std::vector<Successor> successors(const Diagram& d) {
  std::vector<Successor> out;
  for (const FlypeSite& site : find_flype_sites(d)) {
    FlypeResult r = apply_flype(d, site);
    CanonicalCode code = canonical_code(r.diagram);
    out.push_back({site, std::move(r.diagram), std::move(code)});
  }
  return out;
}

struct Exploration {
  std::vector<OrbitMember> nodes;  // discovery order
  std::vector<OrbitEdge> edges;    // indices in discovery order
  bool truncated = false;
  std::optional<std::size_t> hit;
};

/// Level-synchronous BFS. Successor generation runs in parallel per level;
/// merging is sequential in (frontier, site) order so results do not depend
/// on scheduling.
Exploration explore(const Diagram& seed, const OrbitLimits& limits, const CanonicalCode* target) {
  Exploration ex;
  std::unordered_map<CanonicalCode, std::size_t, CanonicalCodeHash> index;
  CanonicalCode seed_code = canonical_code(seed);
  index.emplace(seed_code, 0);
  ex.nodes.push_back({std::move(seed_code), seed, 0});
  if (target && ex.nodes[0].code == *target) {
    ex.hit = 0;
    return ex;
  }

  std::vector<std::size_t> frontier{0};
  for (int depth = 0; !frontier.empty(); ++depth) {
    std::vector<std::vector<Successor>> found(frontier.size());
    parallel_for(frontier.size(), [&](std::size_t i) { found[i] = successors(ex.nodes[frontier[i]].representative); });

    if (depth >= limits.max_depth) {
      for (const auto& list : found)
        for (const Successor& s : list)
          if (!index.count(s.code)) ex.truncated = true;
      break;
    }
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (Successor& s : found[i]) {
        auto it = index.find(s.code);
        std::size_t to;
        if (it != index.end()) {
          to = it->second;
        } else {
          if (ex.nodes.size() >= limits.max_nodes) {
            ex.truncated = true;
            continue;
          }
          to = ex.nodes.size();
          index.emplace(s.code, to);
          ex.nodes.push_back({std::move(s.code), std::move(s.diagram), depth + 1});
          next.push_back(to);
          if (target && ex.nodes[to].code == *target) {
            ex.edges.push_back({frontier[i], to, std::move(s.site)});
            ex.hit = to;
            return ex;
          }
        }
        ex.edges.push_back({frontier[i], to, std::move(s.site)});
      }
    frontier = std::move(next);
  }
  return ex;
}

}  // namespace

OrbitReport flype_orbit(const Diagram& d, const OrbitLimits& limits) {
  require_flype_preconditions(d);
  Exploration ex = explore(d, limits, nullptr);

  OrbitReport report;
  report.limits = limits;
  report.truncated = ex.truncated;
  report.seeds.push_back(ex.nodes[0].code);
  report.invariants = invariant_vector(d);

  std::vector<std::size_t> order(ex.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ex.nodes[a].code < ex.nodes[b].code; });
  std::vector<std::size_t> rank(ex.nodes.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  std::vector<InvariantVector> inv(ex.nodes.size());
  parallel_for(ex.nodes.size(), [&](std::size_t i) { inv[i] = invariant_vector(ex.nodes[i].representative); });
  for (const auto& v : inv) report.invariants_consistent = report.invariants_consistent && v == report.invariants;

  for (std::size_t r : order) report.members.push_back(std::move(ex.nodes[r]));
  for (OrbitEdge& e : ex.edges) report.edges.push_back({rank[e.from], rank[e.to], std::move(e.site)});
  std::sort(report.edges.begin(), report.edges.end());
  return report;
}

RelationResult is_flype_related(const Diagram& a, const Diagram& b, const OrbitLimits& limits) {
  require_flype_preconditions(a);
  require_flype_preconditions(b);
  RelationResult result;
  const InvariantVector ia = invariant_vector(a);
  const InvariantVector ib = invariant_vector(b);
  if (ia.crossings != ib.crossings) result.invariant = "crossing_number";
  else if (ia.writhe != ib.writhe) result.invariant = "writhe";
  else if (ia.slope_b != ib.slope_b) result.invariant = "slope_B";
  else if (ia.slope_w != ib.slope_w) result.invariant = "slope_W";
  else if (ia.determinant != ib.determinant) result.invariant = "determinant";
  if (!result.invariant.empty()) {
    result.relation = Relation::DistinguishedByInvariant;
    return result;
  }
  const CanonicalCode target = canonical_code(b);
  const Exploration ex = explore(a, limits, &target);
  result.explored = ex.nodes.size();
  result.truncated = ex.truncated;
  if (ex.hit) {
    result.relation = Relation::Related;
    result.distance = ex.nodes[*ex.hit].depth;
  } else {
    result.relation = Relation::NotRelatedWithin;
  }
  return result;
}

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Related: return "Related";
    case Relation::NotRelatedWithin: return "NotRelatedWithin";
    case Relation::DistinguishedByInvariant: return "DistinguishedByInvariant";
  }
  return "Unknown";
}

std::string describe(const RelationResult& r) {
  std::ostringstream os;
  switch (r.relation) {
    case Relation::Related:
      os << "Related (flype distance " << r.distance << ", " << r.explored << " diagrams explored)";
      break;
    case Relation::DistinguishedByInvariant:
      os << "DistinguishedByInvariant(" << r.invariant << ")";
      break;
    case Relation::NotRelatedWithin:
      os << "NotRelatedWithin(" << r.explored << " diagrams explored" << (r.truncated ? ", truncated" : ", orbit exhausted")
         << ")";
      break;
  }
  return os.str();
}

std::string to_json(const OrbitReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["seeds"] = ordered_json::array();
  for (const auto& s : report.seeds) j["seeds"].push_back(s.values);
  j["size"] = report.members.size();
  j["truncated"] = report.truncated;
  j["limits"] = {{"max_nodes", report.limits.max_nodes}, {"max_depth", report.limits.max_depth}};
  const auto& inv = report.invariants;
  j["invariants"] = {{"crossing_number", inv.crossings}, {"writhe", inv.writhe},   {"slope_B", inv.slope_b},
                     {"slope_W", inv.slope_w},           {"beta1_B", inv.beta1_b}, {"beta1_W", inv.beta1_w},
                     {"determinant", inv.determinant}};
  j["invariants_consistent"] = report.invariants_consistent;
  j["members"] = ordered_json::array();
  for (const auto& m : report.members) {
    ordered_json item;
    item["code"] = m.code.values;
    item["depth"] = m.depth;
    item["pd"] = serialize_pd(m.representative);
    j["members"].push_back(std::move(item));
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : report.edges) {
    ordered_json item;
    item["from"] = e.from;
    item["to"] = e.to;
    item["site"] = ordered_json::parse(to_json(e.site));
    j["edges"].push_back(std::move(item));
  }
  return j.dump(2);
}

std::string to_dot(const OrbitReport& report) {
  std::ostringstream os;
  os << "digraph flype_orbit {\n";
  for (std::size_t i = 0; i < report.members.size(); ++i)
    os << "  m" << i << " [label=\"" << i << " (depth " << report.members[i].depth << ")\"];\n";
  for (const auto& e : report.edges)
    os << "  m" << e.from << " -> m" << e.to << " [label=\"c" << e.site.crossing << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace taitkit
