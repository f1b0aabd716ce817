// Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit if any
// fails. All comparisons are exact; the two runtime budgets are wall-clock.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "taitkit/codecs.hpp"
#include "taitkit/flype.hpp"
#include "taitkit/form_ops.hpp"
#include "taitkit/goeritz.hpp"
#include "taitkit/orbit.hpp"

using namespace taitkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  Outcome() { detail << std::fixed << std::setprecision(3); }

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("[%s] criterion %d %s: %s(%.3f s)\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.str().c_str(),
              seconds);
  std::fflush(stdout);
  failures += !out.pass;
}

double elapsed(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

const DiagramDocument* find(const std::vector<DiagramDocument>& docs, const std::string& name) {
  for (const auto& d : docs)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace

int main() {
  const std::vector<DiagramDocument> docs = load_table(oracle::table_path());

  criterion(1, "definiteness dichotomy", [&](Outcome& out) {
    const auto start = Clock::now();
    static const char* knots[] = {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "7_2", "7_3", "7_4",
                                  "7_5", "7_6", "7_7", "8_1", "8_2", "8_3", "8_4", "8_5", "8_6", "8_7", "8_8",
                                  "8_9", "8_10", "8_11", "8_12", "8_13", "8_14", "8_15", "8_16", "8_17", "8_18"};
    for (const char* k : knots) out.require(find(docs, k) != nullptr, std::string("table lacks ") + k);
    out.require(docs.size() >= 18, "fewer than 18 entries");
    int ok = 0;
    for (const auto& doc : docs) {
      const ChessboardPair p = analyze_chessboards(doc.diagram);
      const bool good = is_reduced(doc.diagram) && is_alternating(doc.diagram) &&
                        p.b.definiteness == Definiteness::Positive && p.w.definiteness == Definiteness::Negative;
      out.require(good, doc.name);
      ok += good;
    }
    const double s = elapsed(start);
    out.require(s < 5.0, "runtime budget of 5 s exceeded");
    out.detail << ok << "/" << docs.size() << " entries with one Positive and one Negative chessboard, " << s
               << " s of 5 s ";
  });

  criterion(2, "slope identities", [&](Outcome& out) {
    int ok = 0;
    for (const auto& doc : docs) {
      const Diagram& d = doc.diagram;
      const Slopes s = slopes(d);
      const ChessboardPair p = analyze_chessboards(d);
      const int n = d.crossing_count(), w = writhe(d);
      const bool good = (s.black - s.white) == 2 * n && (s.black + s.white) == 2 * w &&
                        s.black - s.white == 2 * (p.b.beta1 + p.w.beta1) &&
                        gl_slope(d, p.coloring, p.b.shading) == s.black &&
                        gl_slope(d, p.coloring, p.w.shading) == s.white;
      out.require(good, doc.name);
      ok += good;
    }
    out.detail << ok << "/" << docs.size()
               << " entries satisfy (sB-sW)/2=n, (sB+sW)/2=w, sB-sW=2(b1(B)+b1(W)); GL-route slopes agree ";
  });

  criterion(3, "flype invariance", [&](Outcome& out) {
    const auto start = Clock::now();
    int sites = 0, ok = 0;
    for (const auto& doc : docs) {
      const InvariantVector inv = invariant_vector(doc.diagram);
      for (const FlypeSite& s : find_flype_sites(doc.diagram)) {
        ++sites;
        const Diagram r = apply_flype(doc.diagram, s).diagram;
        const bool good = is_alternating(r) && is_reduced(r) && is_prime_diagram(r) && invariant_vector(r) == inv;
        out.require(good, doc.name + " site at crossing " + std::to_string(s.crossing));
        ok += good;
      }
    }
    const double t = elapsed(start);
    out.require(t <= 30.0, "runtime budget of 30 s exceeded");
    out.require(sites > 0, "no flype sites found");
    out.detail << ok << "/" << sites << " flypes preserve (n,w,sB,sW,b1(B),b1(W),|det|) and stay reduced alternating prime, "
               << t << " s of 30 s ";
  });

  criterion(4, "flyping theorem at desk scale", [&](Outcome& out) {
    int related = 0, same_pairs = 0;
    for (const auto& doc : docs) {
      const auto it = doc.tags.find("same_link_as");
      if (it == doc.tags.end()) continue;
      const DiagramDocument* seed = find(docs, it->second);
      out.require(seed != nullptr, "missing seed " + it->second);
      if (!seed) continue;
      ++same_pairs;
      const bool distinct = canonical_code(seed->diagram) != canonical_code(doc.diagram);
      const RelationResult r = is_flype_related(seed->diagram, doc.diagram, {10000, 64});
      const bool good = distinct && r.relation == Relation::Related;
      out.require(good, seed->name + " vs " + doc.name);
      related += good;
    }
    out.require(related >= 5, "fewer than 5 same-link pairs");
    static const char* cross[][2] = {{"3_1", "4_1"}, {"5_1", "5_2"}, {"6_1", "6_2"}, {"6_2", "6_3"},
                                     {"7_1", "7_2"}, {"7_6", "7_7"}, {"8_1", "8_2"}, {"8_8", "8_9"},
                                     {"L2a1", "3_1"}, {"L4a1", "L5a1"}};
    int distinguished = 0, cross_pairs = 0;
    for (const auto& pair : cross) {
      const DiagramDocument* a = find(docs, pair[0]);
      const DiagramDocument* b = find(docs, pair[1]);
      out.require(a && b, std::string("missing ") + pair[0] + "/" + pair[1]);
      if (!a || !b) continue;
      ++cross_pairs;
      const bool good = is_flype_related(a->diagram, b->diagram).relation == Relation::DistinguishedByInvariant;
      out.require(good, std::string(pair[0]) + " vs " + pair[1]);
      distinguished += good;
    }
    out.require(distinguished >= 5, "fewer than 5 cross-link pairs");
    out.detail << related << "/" << same_pairs << " same-link pairs Related within 10^4 nodes; " << distinguished << "/"
               << cross_pairs << " cross-link pairs DistinguishedByInvariant ";
  });

  criterion(5, "form operations", [&](Outcome& out) {
    std::mt19937 rng(20261014);
    std::uniform_int_distribution<int> dim3(1, 3), twist(1, 5), entry(-3, 3), dim4(1, 4);
    int preserved = 0, oracle_checked = 0, oracle_agree = 0;
    auto oracle_check = [&](const SymmetricIntForm& f) {
      ++oracle_checked;
      const bool agree = definiteness(f) == oracle::brute_force_definiteness(f);
      out.require(agree, "oracle disagreement on " + f.to_string());
      oracle_agree += agree;
    };
    for (int trial = 0; trial < 1000; ++trial) {
      const SymmetricIntForm f = oracle::random_positive_form(rng, dim3(rng));
      const SymmetricIntForm g = oracle::random_positive_form(rng, dim3(rng));
      std::vector<int> keep;
      for (int i = 0; i < f.dim(); ++i)
        if (rng() % 2) keep.push_back(i);
      const int index = std::uniform_int_distribution<int>(0, f.dim() - 1)(rng);
      const SymmetricIntForm twisted = add_twists(f, index, twist(rng));
      const SymmetricIntForm cut = restrict(f, keep);
      const bool good = definiteness(f) == Definiteness::Positive &&
                        definiteness(block_sum(f, g)) == Definiteness::Positive &&
                        definiteness(twisted) == Definiteness::Positive && definiteness(cut) == Definiteness::Positive;
      out.require(good, "positivity lost from " + f.to_string());
      preserved += good;
      oracle_check(f);
      oracle_check(twisted);
      oracle_check(cut);
      SymmetricIntForm r(dim4(rng));
      for (int i = 0; i < r.dim(); ++i)
        for (int j = i; j < r.dim(); ++j) r.set(i, j, entry(rng));
      oracle_check(r);
    }
    out.detail << preserved << "/1000 random positive forms stay positive under block_sum, add_twists, restrict; "
               << oracle_agree << "/" << oracle_checked << " forms (dim <= 4) agree with the vector oracle ";
  });

  criterion(6, "determinant consistency", [&](Outcome& out) {
    int ok = 0, tagged = 0;
    for (const auto& doc : docs) {
      const ChessboardPair p = analyze_chessboards(doc.diagram);
      const std::int64_t db = std::abs(determinant(p.b.form));
      const std::int64_t dw = std::abs(determinant(p.w.form));
      bool good = db == dw && db == oracle::determinant_from_bracket(oracle::kauffman_bracket(doc.pd));
      if (const auto it = doc.tags.find("determinant"); it != doc.tags.end()) {
        ++tagged;
        good = good && db == std::stoll(it->second);
      }
      out.require(good, doc.name);
      ok += good;
    }
    auto det_of = [](const char* pd) {
      return invariant_vector(build_from_crossing_list(parse_pd_text(pd))).determinant;
    };
    const bool hand = det_of("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]") == 3 &&
                      det_of("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]") == 5 &&
                      det_of("PD[X[4,1,3,2],X[2,3,1,4]]") == 2;
    out.require(hand, "hand-checked determinants");
    out.detail << ok << "/" << docs.size() << " entries with |det G_B| = |det G_W| = bracket determinant, " << tagged
               << " matching tags; trefoil=3, figure-eight=5, Hopf=2 ";
  });

  criterion(7, "round-trip encodings", [&](Outcome& out) {
    int ok = 0;
    for (const auto& doc : docs) {
      const CanonicalCode code = canonical_code(doc.diagram);
      const Diagram pd_back = build_from_crossing_list(parse_pd_text(serialize_pd(doc.diagram)));
      const Diagram gauss_back = parse_gauss(serialize_gauss(doc.diagram));
      bool good = canonical_code(pd_back) == code && canonical_code(gauss_back) == code;
      if (const auto it = doc.tags.find("gauss"); it != doc.tags.end())
        good = good && canonical_code(parse_gauss(it->second)) == code;
      out.require(good, doc.name);
      ok += good;
    }
    out.detail << ok << "/" << docs.size() << " entries agree across PD, serialized PD, Gauss and tagged Gauss codes ";
  });

  return failures == 0 ? 0 : 1;
}
