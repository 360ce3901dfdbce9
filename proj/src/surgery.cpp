#include "rahp/surgery.hpp"

#include <algorithm>
#include <stdexcept>

namespace rahp {

CombinatorialPolytope double_along_face(const CombinatorialPolytope& p, FaceId f) {
  p.require_valid();
  const Face& mirror_face = p.face(f);
  const int V = p.vertex_count();

  std::vector<char> on_face(V, 0);
  for (VertexId v : mirror_face) {
    if (p.valence(v) > 4) {
      throw std::invalid_argument("cannot double along a face with an overfull vertex");
    }
    on_face[v] = 1;
  }
  auto is_ideal = [&](VertexId v) { return p.valence(v) == 4; };
  // Provisional id of v in the mirror copy.
  auto mirrored = [&](VertexId v) { return on_face[v] && is_ideal(v) ? v : v + V; };

  std::vector<Face> faces;
  std::vector<Face> mirror_copies;
  faces.reserve(2 * p.face_count());
  for (FaceId g = 0; g < p.face_count(); ++g) {
    if (g == f) continue;
    const Face& cycle = p.face(g);
    const int k = static_cast<int>(cycle.size());
    if (auto shared = p.shared_edge(f, g)) {
      // Rotate g so that it reads a, b, x_1 .. x_m with {a, b} the shared edge.
      int start = 0;
      for (; start < k; ++start) {
        if (Edge(cycle[start], cycle[(start + 1) % k]) == *shared) break;
      }
      const VertexId a = cycle[start];
      const VertexId b = cycle[(start + 1) % k];
      std::vector<VertexId> rest;
      for (int i = 2; i < k; ++i) rest.push_back(cycle[(start + i) % k]);

      Face merged;
      if (is_ideal(b)) merged.push_back(b);
      merged.insert(merged.end(), rest.begin(), rest.end());
      if (is_ideal(a)) merged.push_back(a);
      for (auto it = rest.rbegin(); it != rest.rend(); ++it) merged.push_back(mirrored(*it));
      faces.push_back(std::move(merged));
    } else {
      faces.push_back(cycle);
      Face copy(cycle.rbegin(), cycle.rend());
      for (auto& v : copy) v = mirrored(v);
      mirror_copies.push_back(std::move(copy));
    }
  }
  faces.insert(faces.end(), std::make_move_iterator(mirror_copies.begin()),
               std::make_move_iterator(mirror_copies.end()));

  std::vector<int> new_id(2 * V, -1);
  for (const auto& face : faces)
    for (VertexId v : face) new_id[v] = 0;
  int next = 0;
  for (auto& id : new_id)
    if (id == 0) id = next++;
  for (auto& face : faces)
    for (auto& v : face) v = new_id[v];

  CombinatorialPolytope out(p.name() + "|d" + std::to_string(f), std::move(faces));
  if (!out.valid()) {
    throw InvalidPolytope("doubling produced an invalid polytope: " + out.validation().summary(),
                          out.validation());
  }
  return out;
}

FaceVertexKinds face_vertex_kinds(const CombinatorialPolytope& p, FaceId f) {
  FaceVertexKinds kinds;
  for (VertexId v : p.face(f)) {
    if (p.valence(v) == 4) ++kinds.ideal;
    if (p.valence(v) == 3) ++kinds.finite;
  }
  return kinds;
}

const char* to_string(FaceSelector s) {
  switch (s) {
    case FaceSelector::FirstValid: return "first-valid";
    case FaceSelector::MaxDegree: return "max-degree";
    case FaceSelector::AllTriangleNeighbours: return "all-triangle-neighbours";
    case FaceSelector::NonIdealTriangleN6: return "n6-non-ideal-triangle";
    case FaceSelector::Explicit: return "explicit";
  }
  return "?";
}

FaceSelector face_selector_from_string(const std::string& s) {
  for (auto sel : {FaceSelector::FirstValid, FaceSelector::MaxDegree, FaceSelector::AllTriangleNeighbours,
                   FaceSelector::NonIdealTriangleN6, FaceSelector::Explicit}) {
    if (s == to_string(sel)) return sel;
  }
  throw std::invalid_argument("unknown face selector '" + s + "'");
}

FaceId FaceSelection::select(const CombinatorialPolytope& p, int stage) const {
  p.require_valid();
  auto doublable = [&](FaceId f) {
    const auto& face = p.face(f);
    return std::all_of(face.begin(), face.end(), [&](VertexId v) { return p.valence(v) <= 4; });
  };
  switch (strategy) {
    case FaceSelector::FirstValid:
      for (FaceId f = 0; f < p.face_count(); ++f)
        if (doublable(f)) return f;
      break;
    case FaceSelector::MaxDegree: {
      FaceId best = -1;
      for (FaceId f = 0; f < p.face_count(); ++f) {
        if (doublable(f) && (best < 0 || p.degree(f) > p.degree(best))) best = f;
      }
      if (best >= 0) return best;
      break;
    }
    case FaceSelector::AllTriangleNeighbours:
      for (FaceId f = 0; f < p.face_count(); ++f) {
        if (p.degree(f) != 3 || !doublable(f)) continue;
        const auto& adj = p.edge_adjacent_faces(f);
        if (std::all_of(adj.begin(), adj.end(), [&](FaceId g) { return p.degree(g) == 3; })) return f;
      }
      break;
    case FaceSelector::NonIdealTriangleN6:
      for (FaceId f : n6_faces(p)) {
        if (!is_ideal_triangle(p, f) && doublable(f)) return f;
      }
      break;
    case FaceSelector::Explicit:
      if (stage >= 0 && stage < static_cast<int>(explicit_faces.size())) {
        FaceId f = explicit_faces[stage];
        if (!p.has_face(f)) throw std::out_of_range("unknown face id " + std::to_string(f));
        return f;
      }
      break;
  }
  throw std::invalid_argument(std::string("face selector '") + to_string(strategy) +
                              "' found no face at stage " + std::to_string(stage));
}

DoublingChain double_chain(const CombinatorialPolytope& p, int depth, const FaceSelection& selection) {
  if (depth < 0) throw std::invalid_argument("chain depth must be >= 0");
  p.require_valid();
  DoublingChain chain;
  chain.polytopes.push_back(p);
  for (int stage = 0; stage < depth; ++stage) {
    const auto& current = chain.polytopes.back();
    const FaceId f = selection.select(current, stage);
    const auto kinds = face_vertex_kinds(current, f);
    chain.stages.push_back({f, kinds.ideal, kinds.finite});
    chain.polytopes.push_back(double_along_face(current, f));
  }
  return chain;
}

std::vector<FaceId> n6_faces(const CombinatorialPolytope& p) {
  p.require_valid();
  std::vector<FaceId> out;
  for (FaceId f = 0; f < p.face_count(); ++f)
    if (face_neighbours(p, f) >= 6) out.push_back(f);
  return out;
}

bool is_ideal_triangle(const CombinatorialPolytope& p, FaceId f) {
  const auto& face = p.face(f);
  return face.size() == 3 &&
         std::all_of(face.begin(), face.end(), [&](VertexId v) { return p.valence(v) == 4; });
}

}  // namespace rahp
