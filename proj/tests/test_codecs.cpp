#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "taitkit/codecs.hpp"
#include "taitkit/orbit.hpp"

using namespace taitkit;

namespace {

const std::vector<PdTuple> kTrefoil{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};

Diagram pd(const char* text) { return build_from_crossing_list(parse_pd_text(text)); }

bool same(const Diagram& a, const Diagram& b) { return canonical_code(a) == canonical_code(b); }

}  // namespace

TEST_CASE("parse_pd_text: bracket and line formats") {
  CHECK(parse_pd_text("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]") == kTrefoil);
  CHECK(parse_pd_text(" PD[ X[1, 4, 2, 5],\n  X[3,6,4,1], X[5,2,6,3] ] ") == kTrefoil);
  CHECK(parse_pd_text("1 4 2 5\n3 6 4 1\n5 2 6 3") == kTrefoil);
  CHECK(parse_pd_text("1 4 2 5\n\n3 6 4 1\n5 2 6 3\n") == kTrefoil);
}

TEST_CASE("parse_pd_text: syntax errors carry a position") {
  CHECK_THROWS_AS(parse_pd_text("PD[X[1,2,3]]"), SyntaxError);
  CHECK_THROWS_AS(parse_pd_text("PD[X[1,2,3,4]"), SyntaxError);
  CHECK_THROWS_AS(parse_pd_text("PD[X[1,2,a,4]]"), SyntaxError);
  CHECK_THROWS_AS(parse_pd_text("1 2 3\n"), SyntaxError);
  try {
    parse_pd_text("1 4 2 5\n3 6 x 1\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
    CHECK(e.kind() == ErrorKind::Syntax);
  }
}

TEST_CASE("parse_gauss: trefoil, kink and the Hopf link") {
  const Diagram trefoil = parse_gauss("O1+U2+O3+U1+O2+U3+");
  CHECK(trefoil.crossing_count() == 3);
  CHECK(writhe(trefoil) == 3);
  CHECK(same(trefoil, pd("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]")));
  CHECK(same(parse_gauss("O1-U2-O3-U1-O2-U3-"), pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")));

  const Diagram kink = parse_gauss("O1+U1+");
  CHECK(kink.crossing_count() == 1);
  CHECK_FALSE(is_reduced(kink));

  // One component visiting both crossings twice is an unknot with two kinks.
  const Diagram twisted = parse_gauss("O1+U2+O2+U1+");
  CHECK(twisted.crossing_count() == 2);
  CHECK(twisted.components().size() == 1);
  CHECK_FALSE(is_reduced(twisted));

  // The Hopf link needs one line per component.
  const Diagram hopf = parse_gauss("O1-U2-\nU1-O2-");
  CHECK(hopf.components().size() == 2);
  CHECK(same(hopf, pd("PD[X[4,1,3,2],X[2,3,1,4]]")));
}

TEST_CASE("parse_gauss: errors") {
  CHECK_THROWS_AS(parse_gauss("O1+U2+O3"), SyntaxError);
  CHECK_THROWS_AS(parse_gauss("O1+X2+"), SyntaxError);
  auto kind_of = [](const char* text) {
    try {
      parse_gauss(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Syntax;
  };
  // Inconsistent codes describe no diagram at all.
  CHECK(kind_of("O1+O1+") == ErrorKind::NonRealizable);
  CHECK(kind_of("O1+U1-") == ErrorKind::NonRealizable);
  CHECK(kind_of("O1+U2+") == ErrorKind::NonRealizable);
  // The virtual trefoil has no planar realization.
  CHECK(kind_of("O1-U2-U1-O2-") == ErrorKind::NonRealizable);
}

TEST_CASE("serialize_pd: round trips") {
  for (const char* code : {"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]", "PD[X[4,1,3,2],X[2,3,1,4]]", "PD[X[1,1,2,2]]"}) {
    const Diagram d = pd(code);
    const std::string text = serialize_pd(d);
    const Diagram back = pd(text.c_str());
    CHECK(same(d, back));
    CHECK(serialize_pd(back) == text);
    CHECK(writhe(back) == writhe(d));
  }
  CHECK(serialize_pd(pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")) == "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
}

TEST_CASE("serialize_gauss: round trips through parse_gauss") {
  for (const auto& doc : load_table(oracle::table_path())) {
    CAPTURE(doc.name);
    const Diagram g = parse_gauss(serialize_gauss(doc.diagram));
    CHECK(same(g, doc.diagram));
    CHECK(writhe(g) == writhe(doc.diagram));
  }
}

TEST_CASE("load_table: bundled table") {
  const auto docs = load_table(oracle::table_path());
  CHECK(docs.size() >= 18);
  std::set<std::string> names;
  for (const auto& d : docs) names.insert(d.name);
  for (const char* n : {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "7_2", "7_3", "7_4", "7_5",
                        "7_6", "7_7", "8_1", "8_2", "8_3", "8_4", "8_5", "8_6", "8_7", "8_8", "8_9", "8_10",
                        "8_11", "8_12", "8_13", "8_14", "8_15", "8_16", "8_17", "8_18"})
    CHECK_MESSAGE(names.count(n) == 1, n);
}

TEST_CASE("parse_table: schema handling") {
  CHECK(parse_table("[]").empty());
  CHECK_THROWS_AS(parse_table("{}"), Error);
  CHECK_THROWS_AS(parse_table("[{"), Error);
  const char* bad = R"([
    {"name": "a", "pd": [[1,1,2,2]]},
    {"name": "b", "pd": [[1,1,2,2]], "tags": {"x": "y"}},
    {"name": "c", "pd": [[1,1,2]]}
  ])";
  try {
    parse_table(bad);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.index() == 2);
  }
  try {
    parse_table(R"([{"name": "a", "pd": [[1,1,2,2]]}, {"pd": []}])");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.index() == 1);
  }
  try {
    parse_table(R"([{"name": "split", "pd": [[1,1,2,2],[3,3,4,4]]}])");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.index() == 0);
  }
  const auto docs = parse_table(R"([{"name": "k", "pd": [[1,1,2,2]], "tags": {"determinant": "1"}}])");
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].tags.at("determinant") == "1");
}

TEST_CASE("load_table: missing file is an I/O error") {
  try {
    load_table("/nonexistent/table.json");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
}
