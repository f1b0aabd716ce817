#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "taitkit/codecs.hpp"
#include "taitkit/form_ops.hpp"
#include "taitkit/goeritz.hpp"

using namespace taitkit;

namespace {

Diagram pd(const char* text) { return build_from_crossing_list(parse_pd_text(text)); }

const char* kTrefoilRight = "PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]";
const char* kTrefoilLeft = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
const char* kHopf = "PD[X[4,1,3,2],X[2,3,1,4]]";
const char* kFigureEight = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";
// Right-handed trefoil with a kink spliced into edge 6.
const char* kKinkedTrefoil = "PD[X[1,5,2,4],X[3,1,4,8],X[5,3,6,2],X[6,7,7,8]]";

Color color_with(const Coloring& c, int regions) {
  return c.count(Color::Black) == regions ? Color::Black : Color::White;
}

}  // namespace

TEST_CASE("inertia and definiteness on small forms") {
  CHECK(definiteness(SymmetricIntForm{{2, -1}, {-1, 2}}) == Definiteness::Positive);
  CHECK(definiteness(SymmetricIntForm{{-2}}) == Definiteness::Negative);
  CHECK(definiteness(SymmetricIntForm{{1, 2}, {2, 1}}) == Definiteness::Indefinite);
  CHECK(definiteness(SymmetricIntForm{{1, 1}, {1, 1}}) == Definiteness::Degenerate);
  CHECK(definiteness(SymmetricIntForm{{0, 1}, {1, 0}}) == Definiteness::Indefinite);
  CHECK(definiteness(SymmetricIntForm(0)) == Definiteness::Positive);
  CHECK(inertia(SymmetricIntForm{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}) == Inertia{1, 1, 1});
  CHECK(determinant(SymmetricIntForm{{2, -1}, {-1, 2}}) == 3);
  CHECK(determinant(SymmetricIntForm(0)) == 1);
  CHECK_THROWS_AS(SymmetricIntForm::from_rows({{1, 2}, {3, 4}}), Error);
  CHECK_THROWS_AS(SymmetricIntForm::from_rows({{1, 2}}), Error);
}

TEST_CASE("definiteness agrees with the brute-force vector oracle") {
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> entry(-3, 3), dim_of(1, 4);
  int seen[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = dim_of(rng);
    SymmetricIntForm f(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) f.set(i, j, entry(rng));
    const Definiteness got = definiteness(f);
    CAPTURE(f.to_string());
    CHECK(got == oracle::brute_force_definiteness(f));
    CHECK(determinant(f) == oracle::cofactor_det(f.rows()));
    CHECK((got == Definiteness::Positive) == oracle::sylvester_positive(f));
    ++seen[static_cast<int>(got)];
  }
  // Random positive forms, which uniform sampling rarely produces.
  for (int trial = 0; trial < 500; ++trial) {
    const SymmetricIntForm f = oracle::random_positive_form(rng, 1 + trial % 4);
    CHECK(definiteness(f) == Definiteness::Positive);
    CHECK(oracle::brute_force_definiteness(f) == Definiteness::Positive);
    SymmetricIntForm g(f.dim());
    for (int i = 0; i < f.dim(); ++i)
      for (int j = i; j < f.dim(); ++j) g.set(i, j, -f.at(i, j));
    CHECK(definiteness(g) == Definiteness::Negative);
    ++seen[0];
  }
  for (int k = 0; k < 4; ++k) CHECK(seen[k] > 0);
}

TEST_CASE("goeritz_matrix: trefoil, Hopf and figure-eight") {
  const Diagram t = pd(kTrefoilRight);
  const Coloring c = color_chessboard(t);
  const SymmetricIntForm on_three = goeritz_matrix(t, c, color_with(c, 3));
  CHECK(on_three.dim() == 2);
  CHECK(std::abs(determinant(on_three)) == 3);
  // Negative of the classical [[2,-1],[-1,2]] in this sign convention.
  CHECK(congruent_small(on_three, SymmetricIntForm{{-2, 1}, {1, -2}}, 1));
  const SymmetricIntForm on_two = goeritz_matrix(t, c, color_with(c, 2));
  CHECK(on_two == SymmetricIntForm{{3}});

  const Diagram h = pd(kHopf);
  const Coloring hc = color_chessboard(h);
  for (Color col : {Color::Black, Color::White}) {
    const SymmetricIntForm g = goeritz_matrix(h, hc, col);
    CHECK(g.dim() == 1);
    CHECK(std::abs(g.at(0, 0)) == 2);
  }

  const Diagram f = pd(kFigureEight);
  const Coloring fc = color_chessboard(f);
  const SymmetricIntForm g = goeritz_matrix(f, fc, color_with(fc, 3));
  CHECK(g.dim() == 2);
  CHECK(std::abs(determinant(g)) == 5);
}

TEST_CASE("beta1 of chessboards") {
  const Diagram t = pd(kTrefoilRight);
  const Coloring c = color_chessboard(t);
  CHECK(beta1_chessboard(t, c, color_with(c, 2)) == 2);
  CHECK(beta1_chessboard(t, c, color_with(c, 3)) == 1);
  const Diagram f = pd(kFigureEight);
  const Coloring fc = color_chessboard(f);
  CHECK(beta1_chessboard(f, fc, Color::Black) + beta1_chessboard(f, fc, Color::White) == 4);
  CHECK(beta1_chessboard(f, fc, Color::Black) == chessboard_form(f, fc, Color::Black).dim());
}

TEST_CASE("slopes from crossing signs") {
  CHECK(slopes(pd(kTrefoilRight)) == Slopes{6, 0});
  CHECK(slopes(pd(kFigureEight)) == Slopes{4, -4});
  CHECK(slopes(pd(kTrefoilLeft)) == Slopes{0, -6});
  CHECK_THROWS_AS(slopes(pd("PD[X[4,1,5,2],X[3,1,4,12],X[5,3,6,2],X[7,11,8,10],X[9,7,10,6],X[11,9,12,8]]")), Error);
}

TEST_CASE("analyze_chessboards: B positive, W negative, both slope routes agree") {
  const Diagram t = pd(kTrefoilRight);
  const ChessboardPair p = analyze_chessboards(t);
  CHECK(p.b.definiteness == Definiteness::Positive);
  CHECK(p.w.definiteness == Definiteness::Negative);
  CHECK(p.b.form == SymmetricIntForm{{3}});
  CHECK(p.b.slope == 6);
  CHECK(p.w.slope == 0);
  CHECK(gl_slope(t, p.coloring, p.b.shading) == 6);
  CHECK(gl_slope(t, p.coloring, p.w.shading) == 0);
}

TEST_CASE("check_identities: trefoil, Hopf and a kinked trefoil") {
  const auto t = check_identities(pd(kTrefoilRight), "3_1");
  CHECK(t.all_pass());
  CHECK(t.checks.size() >= 8);

  const auto h = check_identities(pd(kHopf), "hopf");
  CHECK(h.all_pass());

  const Diagram kinked = pd(kKinkedTrefoil);
  CHECK(kinked.crossing_count() == 4);
  const auto k = check_identities(kinked, "kinked");
  CHECK_FALSE(k.all_pass());
  bool reduced_failed = false, criterion_consistent = false;
  for (const auto& c : k.checks) {
    if (c.check == "reduced") reduced_failed = !c.pass;
    if (c.check == "reduced_form_criterion") criterion_consistent = c.pass;
  }
  CHECK(reduced_failed);
  CHECK(criterion_consistent);
  // The kink shows up as a unit self-pairing on one chessboard.
  const ChessboardPair p = analyze_chessboards(kinked);
  const bool unit = find_unit_self_pairing(p.b.form, 2).has_value() || find_unit_self_pairing(p.w.form, 2).has_value();
  CHECK(unit);

  const std::string json = to_json(t);
  CHECK(json.find("\"name\":\"3_1\"") != std::string::npos);
  CHECK(json.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("find_unit_self_pairing") {
  CHECK_FALSE(find_unit_self_pairing(SymmetricIntForm{{2, -1}, {-1, 2}}, 2).has_value());
  const auto v = find_unit_self_pairing(SymmetricIntForm{{2, 1}, {1, 1}}, 2);
  REQUIRE(v.has_value());
  CHECK(std::abs(SymmetricIntForm{{2, 1}, {1, 1}}.evaluate(*v)) == 1);
  CHECK(unit_search_bound(3) == 2);
  CHECK(unit_search_bound(12) == 1);
}

TEST_CASE("goeritz determinant matches the bracket oracle on the table") {
  for (const auto& doc : load_table(oracle::table_path())) {
    CAPTURE(doc.name);
    const std::int64_t expected = oracle::determinant_from_bracket(oracle::kauffman_bracket(doc.pd));
    CHECK(invariant_vector(doc.diagram).determinant == expected);
  }
}
