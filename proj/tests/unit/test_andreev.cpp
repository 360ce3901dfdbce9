#include <doctest.h>

#include "oracle.hpp"
#include "rahp/andreev.hpp"
#include "rahp/generators.hpp"
#include "rahp/harness.hpp"

using namespace rahp;

TEST_CASE("small non-realizable types") {
  const auto t = classify(tetrahedron());
  CHECK(t.kind == Realizability::NotRealizable);
  REQUIRE(t.witness);
  CHECK(t.witness->kind == AndreevViolation::Tetrahedron);

  const auto p3 = classify(prism(3));
  REQUIRE(p3.witness);
  CHECK(p3.witness->kind == AndreevViolation::TriangularPrism);

  const auto cube = classify(prism(4));
  REQUIRE(cube.witness);
  CHECK(cube.witness->kind == AndreevViolation::Condition4);
  // the equatorial circuit of lateral faces; the bases are faces 0 and 1
  for (FaceId f : cube.witness->faces) CHECK(prism(4).degree(f) == 4);
  CHECK(witness_holds(prism(4), *cube.witness));
}

TEST_CASE("condition 3 on the triangular prism") {
  const auto p = prism(3);
  const auto w = check_condition3(p);
  REQUIRE(w);
  CHECK(w->kind == AndreevViolation::Condition3);
  REQUIRE(w->faces.size() == 3);
  REQUIRE(w->edges.size() == 2);
  CHECK_FALSE(w->edges[0].touches(w->edges[1]));
  CHECK(p.faces_intersect(w->faces[1], w->faces[2]));
  CHECK(witness_holds(p, *w));
}

TEST_CASE("realizable families carry no witness") {
  CHECK_FALSE(check_condition3(antiprism(4)));
  CHECK_FALSE(check_condition3(loebell(5)));
  CHECK_FALSE(check_condition4(antiprism(3)));
  CHECK_FALSE(check_condition4(loebell(6)));
  for (int n = 3; n <= 50; ++n) CHECK(classify(antiprism(n)).kind == Realizability::IdealRA);
  for (int n = 5; n <= 50; ++n) CHECK(classify(loebell(n)).kind == Realizability::CompactRA);
  CHECK(classify(CombinatorialPolytope("C60", oracle::truncate(oracle::icosahedron()))).kind ==
        Realizability::CompactRA);
}

TEST_CASE("prisms beyond the cube fail condition 4") {
  for (int n = 5; n <= 8; ++n) {
    const auto c = classify(prism(n));
    REQUIRE(c.witness);
    CHECK(c.witness->kind == AndreevViolation::Condition4);
    CHECK(witness_holds(prism(n), *c.witness));
  }
}

TEST_CASE("overfull vertex") {
  // pentagonal bipyramid: both apexes have valence 5
  std::vector<Face> faces;
  for (int i = 0; i < 5; ++i) {
    faces.push_back({5, i, (i + 1) % 5});
    faces.push_back({6, (i + 1) % 5, i});
  }
  CombinatorialPolytope bipyramid("bipyramid", faces);
  REQUIRE(bipyramid.valid());
  const auto c = classify(bipyramid);
  REQUIRE(c.witness);
  CHECK(c.witness->kind == AndreevViolation::OverfullVertex);
  CHECK(c.witness->vertex == 5);
  CHECK(witness_holds(bipyramid, *c.witness));
}

TEST_CASE("mixed types") {
  const auto p = contract_edges(loebell(6), {Edge(0, 6)}, "L6/ab1");
  REQUIRE(p.valid());
  CHECK(classify(p).kind == Realizability::MixedRA);
}

TEST_CASE("a witness for one polytope does not certify another") {
  const auto cube = classify(prism(4));
  REQUIRE(cube.witness);
  CHECK_FALSE(witness_holds(antiprism(4), *cube.witness));
}
