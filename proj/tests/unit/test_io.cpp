#include <doctest.h>

#include "rahp/generators.hpp"
#include "rahp/polytope_io.hpp"

using namespace rahp;

TEST_CASE("parse a commented record") {
  const std::string text =
      "# a tetrahedron\n"
      "polytope tet\n"
      "vertices 4\n"
      "\n"
      "face 0 1 2   # base\n"
      "face 0 3 1\n"
      "face 1 3 2\n"
      "face 2 3 0\n";
  const auto p = parse_polytope(text);
  CHECK(p.name() == "tet");
  CHECK(p.vertex_count() == 4);
  CHECK(p.face_count() == 4);
  CHECK(p.valid());
}

TEST_CASE("several records in one stream") {
  const auto text = serialize(antiprism(3)) + serialize(loebell(5));
  const auto ps = parse_polytopes(text);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].name() == "A(3)");
  CHECK(ps[1].name() == "L(5)");
  CHECK_THROWS_AS(parse_polytope(text), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_polytopes(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("face 0 1 2\n") == 1);
  CHECK(line_of("polytope x\nvertices 3\nface 0 1 z\n") == 3);
  CHECK(line_of("polytope x\nvertices 3\nface 0 1 7\n") == 3);
  CHECK(line_of("polytope x\nvertices 4\nface 0 1 2\n") == 2);
  CHECK(line_of("polytope x\nvertices 3\nvertices 3\n") == 3);
  CHECK(line_of("polytope x\nbogus\n") == 2);
  CHECK(line_of("polytope x\nvertices 3\nface\n") == 3);
  CHECK(line_of("polytope x\nface 0 1 2\n") == 1);
  CHECK(line_of("# nothing\n") == 0);
}

TEST_CASE("canonical form") {
  CombinatorialPolytope p("t", {{2, 3, 0}, {1, 0, 3}, {3, 2, 1}, {0, 1, 2}});
  const auto c = canonicalize(p);
  for (const auto& f : c.faces()) {
    CHECK(f[0] == *std::min_element(f.begin(), f.end()));
    CHECK(f[1] < f.back());
  }
  CHECK(std::is_sorted(c.faces().begin(), c.faces().end()));
  CHECK(serialize(c) == serialize(p));
}

TEST_CASE("round trip over generated polytopes") {
  std::vector<CombinatorialPolytope> ps;
  for (int n = 3; n <= 20; ++n) ps.push_back(antiprism(n));
  for (int n = 5; n <= 20; ++n) ps.push_back(loebell(n));
  for (auto& p : octahedron_chain(4).polytopes) ps.push_back(p);
  for (const auto& p : ps) {
    const auto text = serialize(p);
    const auto back = parse_polytope(text);
    CHECK(back.faces() == canonicalize(p).faces());
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("generators") {
  CHECK(generate(Family::Antiprism, 3).front().vertex_count() == 6);
  CHECK(generate(Family::Loebell, 5).front().vertex_count() == 20);
  const auto chain = generate(Family::OctaDoubleChain, 2);
  REQUIRE(chain.size() == 3);
  CHECK(chain[2].vertex_count() == 15);
  CHECK(family_from_string("loebell") == Family::Loebell);
  CHECK_THROWS_AS(family_from_string("cube"), std::invalid_argument);
  CHECK_THROWS(antiprism(2));
  CHECK_THROWS(loebell(4));
  CHECK_THROWS(generate(Family::OctaDoubleChain, -1));
}

TEST_CASE("files") {
  const std::string path = "rahp_io_test.poly";
  write_file(path, serialize(loebell(6)));
  CHECK(parse_polytope(read_file(path)).vertex_count() == 24);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file("/nonexistent/x.poly"), std::runtime_error);
}
