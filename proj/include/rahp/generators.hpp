#pragma once

#include <string>
#include <vector>

#include "rahp/polytope.hpp"
#include "rahp/surgery.hpp"

namespace rahp {

/// A(n): two n-gonal bases and 2n lateral triangles on 2n vertices. n >= 3.
CombinatorialPolytope antiprism(int n);

/// L(n): two n-gonal bases and 2n lateral pentagons on 4n vertices. n >= 5.
CombinatorialPolytope loebell(int n);

/// n-gonal prism; prism(3) is the triangular prism and prism(4) the cube.
CombinatorialPolytope prism(int n);

CombinatorialPolytope tetrahedron();

/// The octahedron doubled `depth` times, each time along a triangle whose
/// edge-neighbours are all triangles. Vertex counts run 6, 9, 15, 27, ...
DoublingChain octahedron_chain(int depth);

enum class Family { Antiprism, Loebell, OctaDoubleChain };

Family family_from_string(const std::string& s);

/// Polytopes for a generator family: one for antiprism/loebell, depth + 1 for
/// the octahedron chain.
std::vector<CombinatorialPolytope> generate(Family family, int n_or_depth);

}  // namespace rahp
