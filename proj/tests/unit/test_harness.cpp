#include <doctest.h>

#include "rahp/bounds.hpp"
#include "rahp/generators.hpp"
#include "rahp/harness.hpp"
#include "rahp/report.hpp"

using namespace rahp;

namespace {

ClaimResult qa(const CombinatorialPolytope& p) { return verify_quasi_adjacent_vertex(p, classify(p)); }

}  // namespace

TEST_CASE("quasi-adjacent vertex claim") {
  const auto r = qa(antiprism(13));
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.witness == "v0:10");
  CHECK(qa(antiprism(12)).verdict == Verdict::NotApplicable);
  CHECK(qa(octahedron_chain(3).polytopes.back()).verdict == Verdict::Holds);
  CHECK(qa(loebell(10)).verdict == Verdict::NotApplicable);
}

TEST_CASE("triangle-free vertex claim") {
  const auto big = octahedron_chain(5).polytopes.back();
  const auto r = verify_triangle_free_vertex(big, classify(big));
  CHECK(r.verdict == Verdict::Holds);
  CHECK(verify_triangle_free_vertex(antiprism(3), classify(antiprism(3))).verdict == Verdict::NotApplicable);
  // A(40) has 80 vertices but two 40-gons
  CHECK(verify_triangle_free_vertex(antiprism(40), classify(antiprism(40))).verdict == Verdict::NotApplicable);
}

TEST_CASE("fat edge claim") {
  const auto l21 = loebell(21);
  const auto r = verify_fat_edge(l21, classify(l21));
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.witness == "(0-1):26 sum=36");
  const auto l25 = loebell(25);
  CHECK(verify_fat_edge(l25, classify(l25)).verdict == Verdict::Holds);
  const auto l5 = verify_fat_edge(loebell(5), classify(loebell(5)));
  CHECK(l5.verdict == Verdict::NotApplicable);
  CHECK(l5.detail.find("average 10") != std::string::npos);
}

TEST_CASE("face-neighbour claims") {
  const auto a9 = antiprism(9);
  CHECK(verify_face_neighbours(a9, classify(a9), 1).verdict == Verdict::Holds);
  const auto l5 = loebell(5);
  CHECK(verify_face_neighbours(l5, classify(l5), 1).verdict == Verdict::NotApplicable);
  const auto d = double_along_face(antiprism(4), 0);
  for (int part = 1; part <= 3; ++part) CHECK(verify_face_neighbours(d, classify(d), part).verdict != Verdict::Fails);
  CHECK_THROWS_AS(verify_face_neighbours(a9, classify(a9), 4), std::invalid_argument);
}

TEST_CASE("contracting edges") {
  const auto p = contract_edges(loebell(5), {Edge(0, 5)}, "L5/ab1");
  CHECK(p.vertex_count() == 19);
  CHECK(p.valid());
  CHECK(profile(p).ideal_vertices == 1);
  CHECK_THROWS_AS(contract_edges(loebell(5), {Edge(0, 2)}, "bad"), std::invalid_argument);
}

TEST_CASE("catalogs") {
  const auto ideal = ideal_catalog();
  CHECK(ideal.size() == 48 + 5 + 96);
  CHECK(ideal.front().polytope.name() == "A(3)");
  CHECK(ideal.front().known_volume.has_value());
  const auto mixed = mixed_catalog();
  CHECK_FALSE(mixed.empty());
  for (const auto& e : mixed) CHECK(classify(e.polytope).kind == Realizability::MixedRA);
  CHECK(suite_from_string("compact") == Suite::Compact);
  CHECK_THROWS_AS(suite_from_string("other"), std::invalid_argument);
}

TEST_CASE("mixed suite has no failures") {
  const auto results = run_suite(mixed_catalog());
  const auto sum = summarize(results);
  CHECK(sum.fails == 0);
  CHECK(sum.holds > 0);
}

TEST_CASE("a false claim is reported as a failure") {
  // an antiprism filed under the Loebell population has the wrong class
  CatalogEntry e{antiprism(4), "loebell", std::nullopt};
  const auto r = verify_realizability(e, classify(e.polytope));
  CHECK(r.verdict == Verdict::Fails);

  CatalogEntry wrong{loebell(6), "loebell", ErrBoundedValue(100.0)};
  CHECK(verify_bound_soundness(wrong, classify(wrong.polytope)).verdict == Verdict::Fails);
}

TEST_CASE("result lines") {
  ClaimResult r{"c", "A(3)", Verdict::Holds, "v0", "x"};
  CHECK(r.line() == "c A(3) holds witness=v0 (x)");
}

TEST_CASE("report formatting") {
  CHECK(format_number(3.6638623767088760) == "3.66386238");
  CHECK(format_number(6.0) == "6");
  CHECK(format_number(-0.5) == "-0.5");
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  const auto header = report_header();
  CHECK(header.size() == 8 + kBoundCount + 4);
  CHECK(header[8] == "ideal_lower_atkinson");
  const auto row = report_row(CatalogEntry{antiprism(4), "antiprism", ErrBoundedValue(6.023046020046)});
  REQUIRE(row.size() == header.size());
  CHECK(row[1] == "IdealRA");
  CHECK(row[7] == "3:8 4:2");
  CHECK(row[header.size() - 4] == "ideal_apex_face");
}

TEST_CASE("report is deterministic") {
  std::vector<CatalogEntry> entries;
  for (int n = 3; n <= 12; ++n) entries.push_back({antiprism(n), "antiprism", std::nullopt});
  entries.push_back({prism(4), "user", std::nullopt});
  const auto a = render_report(entries);
  CHECK(a == render_report(entries));
  CHECK(a.find("cube,NotRealizable") != std::string::npos);
}
