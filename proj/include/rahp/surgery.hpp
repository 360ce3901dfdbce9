#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rahp/polytope.hpp"

namespace rahp {

/// Glues P to its mirror image across face f.
///
/// Finite vertices of f disappear (their two outgoing edges fuse into one),
/// ideal vertices of f are shared by both copies, every face meeting f in an
/// edge fuses with its mirror, and all other faces are duplicated. Vertex ids:
/// the first copy keeps its ids, the mirror copy is offset by V, shared ideal
/// vertices keep first-copy ids, and survivors are then renumbered
/// contiguously in that order. Throws InvalidPolytope if the result does not
/// validate.
CombinatorialPolytope double_along_face(const CombinatorialPolytope& p, FaceId f);

/// Ideal and finite vertex counts of a face.
struct FaceVertexKinds {
  int ideal = 0;
  int finite = 0;
};
FaceVertexKinds face_vertex_kinds(const CombinatorialPolytope& p, FaceId f);

enum class FaceSelector { FirstValid, MaxDegree, AllTriangleNeighbours, NonIdealTriangleN6, Explicit };

const char* to_string(FaceSelector s);
FaceSelector face_selector_from_string(const std::string& s);

/// Chooses the face to double at a given stage (0-based).
struct FaceSelection {
  FaceSelector strategy = FaceSelector::FirstValid;
  std::vector<FaceId> explicit_faces;  // used by Explicit, one per stage

  FaceId select(const CombinatorialPolytope& p, int stage) const;
};

struct DoublingStage {
  FaceId face = 0;
  int k_ideal = 0;
  int k_finite = 0;
};

struct DoublingChain {
  std::vector<CombinatorialPolytope> polytopes;  // depth + 1 entries, starting with the source
  std::vector<DoublingStage> stages;             // depth entries
};

DoublingChain double_chain(const CombinatorialPolytope& p, int depth, const FaceSelection& selection);

/// Faces with at least 6 neighbouring faces.
std::vector<FaceId> n6_faces(const CombinatorialPolytope& p);

/// A triangle all of whose vertices are ideal.
bool is_ideal_triangle(const CombinatorialPolytope& p, FaceId f);

}  // namespace rahp
