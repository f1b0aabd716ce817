#include "taitkit/goeritz.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace taitkit {

namespace {

bool corner_is_mixed(const Diagram& d, CrossingId c, int corner) {
  return d.outgoing(Diagram::dart_at(c, corner)) != d.outgoing(Diagram::dart_at(c, corner + 1));
}

Color corner_color(const Coloring& coloring, CrossingId c, int corner) {
  return coloring.color[coloring.map.region_at(c, corner)];
}

bool positive_compatible(const ChessboardSummary& s) {
  return s.definiteness == Definiteness::Positive;
}

bool negative_compatible(const ChessboardSummary& s) {
  return s.form.dim() == 0 || s.definiteness == Definiteness::Negative;
}

ChessboardSummary summarize(const Diagram& d, const Coloring& coloring, Color surface) {
  ChessboardSummary s;
  s.shading = surface;
  s.form = chessboard_form(d, coloring, surface);
  s.beta1 = beta1_chessboard(d, coloring, surface);
  s.definiteness = definiteness(s.form);
  s.slope = gl_slope(d, coloring, surface);
  return s;
}

std::string str(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

int goeritz_sign(const Diagram& d, const Coloring& coloring, CrossingId c, Color surface) {
  // The corners counterclockwise after the two overstrand darts.
  const int over_slot = d.over_odd(c) ? 1 : 0;
  return corner_color(coloring, c, over_slot) == surface ? +1 : -1;
}

SymmetricIntForm goeritz_matrix(const Diagram& d, const Coloring& coloring, Color region_color) {
  const auto regions = coloring.regions_of(region_color);
  if (regions.empty()) throw Error(ErrorKind::NotConnectedDiagram, "no regions of the requested color");
  std::vector<int> index(coloring.color.size(), -1);
  for (int i = 0; i < static_cast<int>(regions.size()); ++i) index[regions[i]] = i;

  const int r = static_cast<int>(regions.size());
  SymmetricIntForm full(r);
  const Color surface = opposite(region_color);
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    // The two corners of region_color sit opposite each other.
    const int k = corner_color(coloring, c, 0) == region_color ? 0 : 1;
    const int i = index[coloring.map.region_at(c, k)];
    const int j = index[coloring.map.region_at(c, k + 2)];
    if (i == j) continue;
    const int eta = goeritz_sign(d, coloring, c, surface);
    full.add(i, j, -eta);
    full.add(i, i, eta);
    full.add(j, j, eta);
  }
  SymmetricIntForm reduced(r - 1);
  for (int i = 1; i < r; ++i)
    for (int j = i; j < r; ++j) reduced.set(i - 1, j - 1, full.at(i, j));
  return reduced;
}

SymmetricIntForm chessboard_form(const Diagram& d, const Coloring& coloring, Color surface) {
  return goeritz_matrix(d, coloring, opposite(surface));
}

int beta1_chessboard(const Diagram& d, const Coloring& coloring, Color surface) {
  const auto regions = coloring.regions_of(surface);
  std::vector<int> parent(coloring.color.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    const int k = corner_color(coloring, c, 0) == surface ? 0 : 1;
    parent[find(coloring.map.region_at(c, k))] = find(coloring.map.region_at(c, k + 2));
  }
  for (RegionId r : regions)
    if (find(r) != find(regions.front()))
      throw Error(ErrorKind::DisconnectedChessboard, "chessboard surface is disconnected");
  const int beta1 = d.crossing_count() - static_cast<int>(regions.size()) + 1;
  const int form_dim = coloring.count(opposite(surface)) - 1;
  if (beta1 != form_dim) throw Error(ErrorKind::NonPlanar, "beta1 disagrees with the Goeritz dimension");
  return beta1;
}

Slopes slopes(const Diagram& d) {
  if (!is_alternating(d)) throw Error(ErrorKind::NotAlternating, "slopes from crossing signs need an alternating diagram");
  int positive = 0;
  int negative = 0;
  for (int s : crossing_signs(d)) (s > 0 ? positive : negative)++;
  return {2 * positive, -2 * negative};
}

int gl_slope(const Diagram& d, const Coloring& coloring, Color surface) {
  int total = 0;
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    const int k = corner_color(coloring, c, 0) == surface ? 0 : 1;
    // Orientation-respecting crossings have the surface on the two corners
    // bounded by one incoming and one outgoing dart.
    if (corner_is_mixed(d, c, k)) continue;
    total += goeritz_sign(d, coloring, c, surface);
  }
  return 2 * total;
}

ChessboardPair analyze_chessboards(const Diagram& d) {
  ChessboardPair pair;
  pair.coloring = color_chessboard(d);
  ChessboardSummary black = summarize(d, pair.coloring, Color::Black);
  ChessboardSummary white = summarize(d, pair.coloring, Color::White);
  const bool black_first = positive_compatible(black) && negative_compatible(white);
  const bool white_first = positive_compatible(white) && negative_compatible(black);
  pair.labelled_by_sign = black_first || white_first;
  if (!black_first && white_first) std::swap(black, white);
  pair.b = std::move(black);
  pair.w = std::move(white);
  if (is_alternating(d)) {
    const Slopes s = slopes(d);
    pair.b.slope = s.black;
    pair.w.slope = s.white;
  }
  return pair;
}

int unit_search_bound(int dim) noexcept { return dim <= 8 ? 2 : 1; }

std::optional<std::vector<std::int64_t>> find_unit_self_pairing(const SymmetricIntForm& f, int bound) {
  const int m = f.dim();
  if (m == 0) return std::nullopt;
  std::vector<std::int64_t> v(m, -bound);
  for (;;) {
    const std::int64_t value = f.evaluate(v);
    if (value == 1 || value == -1) return v;
    int i = 0;
    while (i < m && v[i] == bound) v[i++] = -bound;
    if (i == m) return std::nullopt;
    ++v[i];
  }
}

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

ValidationReport check_identities(const Diagram& d, std::string name) {
  ValidationReport report;
  report.name = std::move(name);
  auto add = [&](std::string check, bool pass, std::string detail) {
    report.checks.push_back({std::move(check), pass, std::move(detail)});
  };

  const int n = d.crossing_count();
  const int w = writhe(d);
  const bool alternating = is_alternating(d);
  const bool reduced = is_reduced(d);
  add("alternating", alternating, alternating ? "strands alternate over/under" : "some strand passes two overs or two unders in a row");

  ChessboardPair pair;
  try {
    pair = analyze_chessboards(d);
  } catch (const Error& e) {
    add("chessboards", false, std::string(to_string(e.kind())) + ": " + e.what());
    return report;
  }
  const ChessboardSummary& b = pair.b;
  const ChessboardSummary& bw = pair.w;

  {
    std::ostringstream os;
    os << "B: dim " << b.form.dim() << ' ' << to_string(b.definiteness) << ' ' << b.form.to_string() << "; W: dim "
       << bw.form.dim() << ' ' << to_string(bw.definiteness) << ' ' << bw.form.to_string();
    add("definite_opposite_signs", pair.labelled_by_sign, os.str());
  }

  if (alternating) {
    std::ostringstream os;
    os << "s(B)=" << b.slope << " s(W)=" << bw.slope << " beta1(B)=" << b.beta1 << " beta1(W)=" << bw.beta1;
    add("slope_beta1_identity", b.slope - bw.slope == 2 * (b.beta1 + bw.beta1), os.str());

    std::ostringstream oc;
    oc << "s(B)-s(W)=" << b.slope - bw.slope << " 2n=" << 2 * n << (reduced ? "" : " (diagram not reduced)");
    add("slope_crossing_identity", b.slope - bw.slope == 2 * n, oc.str());

    std::ostringstream ow;
    ow << "s(B)+s(W)=" << b.slope + bw.slope << " 2w=" << 2 * w;
    add("slope_writhe_identity", b.slope + bw.slope == 2 * w, ow.str());

    const int gl_b = gl_slope(d, pair.coloring, b.shading);
    const int gl_w = gl_slope(d, pair.coloring, bw.shading);
    std::ostringstream og;
    og << "crossing-sign route (" << b.slope << ',' << bw.slope << ") vs Gordon-Litherland route (" << gl_b << ',' << gl_w
       << ')';
    add("slope_routes_agree", gl_b == b.slope && gl_w == bw.slope, og.str());
  } else {
    for (const char* check : {"slope_beta1_identity", "slope_crossing_identity", "slope_writhe_identity", "slope_routes_agree"})
      add(check, false, "slopes from crossing signs need an alternating diagram");
  }

  const std::int64_t det_b = std::llabs(determinant(b.form));
  const std::int64_t det_w = std::llabs(determinant(bw.form));
  add("determinants_agree", det_b == det_w, "|det G_B|=" + std::to_string(det_b) + " |det G_W|=" + std::to_string(det_w));

  const auto unit_b = find_unit_self_pairing(b.form, unit_search_bound(b.form.dim()));
  const auto unit_w = find_unit_self_pairing(bw.form, unit_search_bound(bw.form.dim()));
  const bool unit_found = unit_b.has_value() || unit_w.has_value();
  std::string unit_detail = "no class with self-pairing +-1 in the bounded search";
  if (unit_b) unit_detail = "B has self-pairing " + std::to_string(b.form.evaluate(*unit_b)) + " at " + str(*unit_b);
  else if (unit_w) unit_detail = "W has self-pairing " + std::to_string(bw.form.evaluate(*unit_w)) + " at " + str(*unit_w);
  add("reduced", reduced, std::string(reduced ? "each crossing abuts four distinct regions" : "a crossing abuts some region twice") + "; " + unit_detail);
  add("reduced_form_criterion", reduced == !unit_found,
      std::string("diagram reduced: ") + (reduced ? "yes" : "no") + "; " + unit_detail);
  return report;
}

std::string to_json(const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["pass"] = report.all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json item;
    item["check"] = c.check;
    item["pass"] = c.pass;
    item["detail"] = c.detail;
    j["checks"].push_back(std::move(item));
  }
  return j.dump();
}

InvariantVector invariant_vector(const Diagram& d) {
  const ChessboardPair pair = analyze_chessboards(d);
  const Slopes s = slopes(d);
  return {d.crossing_count(), writhe(d), s.black, s.white, pair.b.beta1, pair.w.beta1,
          std::llabs(determinant(pair.b.form))};
}

}  // namespace taitkit
