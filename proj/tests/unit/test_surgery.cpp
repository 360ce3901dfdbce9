#include <doctest.h>

#include "rahp/andreev.hpp"
#include "rahp/bounds.hpp"
#include "rahp/generators.hpp"
#include "rahp/harness.hpp"
#include "rahp/surgery.hpp"

using namespace rahp;

TEST_CASE("doubling the octahedron") {
  for (FaceId f = 0; f < 8; ++f) {
    const auto d = double_along_face(antiprism(3), f);
    const auto prof = profile(d);
    CHECK(prof.vertices == 9);
    CHECK(prof.all_ideal());
    CHECK(prof.p(3) == 8);
    CHECK(prof.p(4) == 3);
    CHECK(classify(d).kind == Realizability::IdealRA);
  }
}

TEST_CASE("doubling the dodecahedron") {
  const auto d = double_along_face(loebell(5), 2);
  CHECK(d.vertex_count() == 30);
  CHECK(d.face_count() == 17);
  CHECK(profile(d).all_finite());
  // each pentagon next to the mirror face merges with its copy into a 2 * 5 - 4 = 6-gon
  CHECK(profile(d).p(6) == 5);
  CHECK(classify(d).kind == Realizability::CompactRA);
  CHECK(d.name() == "L(5)|d2");
}

TEST_CASE("N6 faces") {
  CHECK(n6_faces(antiprism(3)).size() == 8);
  CHECK(n6_faces(loebell(5)).empty());
  const auto d = double_along_face(loebell(5), 2);
  for (FaceId f = 0; f < d.face_count(); ++f) {
    if (d.degree(f) == 6) {
      const auto n6 = n6_faces(d);
      CHECK(std::find(n6.begin(), n6.end(), f) != n6.end());
    }
  }
  CHECK(is_ideal_triangle(antiprism(3), 0));
  CHECK_FALSE(is_ideal_triangle(antiprism(4), 0));
}

TEST_CASE("vertex-count contracts on every face") {
  std::vector<CombinatorialPolytope> sources{antiprism(5), loebell(7),
                                             contract_edges(loebell(7), {Edge(0, 7)}, "L7/ab1")};
  for (const auto& p : sources) {
    const auto prof = profile(p);
    for (FaceId f = 0; f < p.face_count(); ++f) {
      const auto kinds = face_vertex_kinds(p, f);
      const auto d = profile(double_along_face(p, f));
      CAPTURE(p.name());
      CAPTURE(f);
      CHECK(d.ideal_vertices == 2 * prof.ideal_vertices - kinds.ideal);
      CHECK(d.finite_vertices == 2 * prof.finite_vertices - 2 * kinds.finite);
      CHECK(d.faces == d.finite_vertices / 2 + d.ideal_vertices + 2);
    }
  }
}

TEST_CASE("octahedron chain") {
  const auto chain = octahedron_chain(5);
  std::vector<int> vs;
  for (const auto& p : chain.polytopes) {
    vs.push_back(p.vertex_count());
    const auto prof = profile(p);
    CHECK(prof.p(3) + prof.p(4) == prof.faces);
  }
  CHECK(vs == std::vector<int>{6, 9, 15, 27, 51, 99});
  CHECK(chain.stages.size() == 5);
  for (const auto& s : chain.stages) CHECK(s.k_ideal == 3);

  const auto trivial = double_chain(antiprism(4), 0, FaceSelection{});
  CHECK(trivial.polytopes.size() == 1);
  CHECK(trivial.stages.empty());
}

TEST_CASE("face selectors") {
  const auto l6 = loebell(6);
  CHECK(FaceSelection{FaceSelector::MaxDegree, {}}.select(l6, 0) == 0);
  CHECK(FaceSelection{FaceSelector::FirstValid, {}}.select(l6, 0) == 0);
  CHECK(FaceSelection{FaceSelector::Explicit, {3, 4}}.select(l6, 1) == 4);
  CHECK_THROWS_AS((FaceSelection{FaceSelector::Explicit, {3}}.select(l6, 1)), std::invalid_argument);
  CHECK_THROWS_AS((FaceSelection{FaceSelector::Explicit, {99}}.select(l6, 0)), std::out_of_range);
  CHECK_THROWS_AS((FaceSelection{FaceSelector::AllTriangleNeighbours, {}}.select(l6, 0)), std::invalid_argument);
  for (auto s : {FaceSelector::FirstValid, FaceSelector::MaxDegree, FaceSelector::AllTriangleNeighbours,
                 FaceSelector::NonIdealTriangleN6, FaceSelector::Explicit}) {
    CHECK(face_selector_from_string(to_string(s)) == s);
  }
  CHECK_THROWS_AS(face_selector_from_string("nope"), std::invalid_argument);
}

TEST_CASE("mixed chains keep a non-ideal-triangle face in N6") {
  const auto p = contract_edges(loebell(8), {Edge(0, 8), Edge(2, 10), Edge(4, 12)}, "L8/ab3");
  REQUIRE(classify(p).kind == Realizability::MixedRA);
  const auto chain = double_chain(p, 4, FaceSelection{FaceSelector::NonIdealTriangleN6, {}});
  for (const auto& r : verify_chain_n6(chain)) CHECK(r.verdict == Verdict::Holds);
  // the stage data feeds the series bound, which must sit below the plain mixed bound
  const auto prof = profile(p);
  const auto series = chain_upper_bound(prof.ideal_vertices, prof.finite_vertices, chain.stages);
  CHECK(series.value < mixed_bounds(prof.ideal_vertices, prof.finite_vertices)[1].value->value);
}

TEST_CASE("doubling refuses bad input") {
  CombinatorialPolytope bad("bad", {{0, 1, 2}, {0, 2, 1}});
  CHECK_THROWS_AS(double_along_face(bad, 0), InvalidPolytope);
  CHECK_THROWS_AS(double_along_face(antiprism(4), 10), std::out_of_range);
}
