#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rahp/polytope.hpp"

namespace rahp {

enum class AndreevViolation { Tetrahedron, TriangularPrism, OverfullVertex, Condition3, Condition4 };

const char* to_string(AndreevViolation kind);

/// Certificate that a combinatorial type is not realizable as a finite-volume
/// right-angled polyhedron. Faces are listed in the order the violated
/// condition names them; edges likewise.
struct AndreevWitness {
  AndreevViolation kind{};
  std::vector<FaceId> faces;
  std::vector<Edge> edges;
  std::optional<VertexId> vertex;  // OverfullVertex only

  std::string describe() const;
};

enum class Realizability { CompactRA, IdealRA, MixedRA, NotRealizable };

const char* to_string(Realizability r);

struct RealizabilityClass {
  Realizability kind = Realizability::NotRealizable;
  std::optional<AndreevWitness> witness;

  bool realizable() const { return kind != Realizability::NotRealizable; }
};

/// Faces f, f', f'' where f meets f' and f'' in disjoint edges but f' and f''
/// intersect. Lexicographically first in (f, f', f'').
std::optional<AndreevWitness> check_condition3(const CombinatorialPolytope& p);

/// Prismatic 4-circuit f1..f4: consecutive faces (cyclically) share edges and
/// those four edges are pairwise vertex-disjoint. Lexicographically first.
std::optional<AndreevWitness> check_condition4(const CombinatorialPolytope& p);

/// Checks, in order: tetrahedron, triangular prism, overfull vertex,
/// condition 3, condition 4. Realizable types are split by vertex kinds.
RealizabilityClass classify(const CombinatorialPolytope& p);

/// Re-checks a witness against p in isolation.
bool witness_holds(const CombinatorialPolytope& p, const AndreevWitness& w);

}  // namespace rahp
