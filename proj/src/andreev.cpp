#include "rahp/andreev.hpp"

#include <algorithm>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace rahp {

namespace {

using Bits = boost::dynamic_bitset<>;

// Row f has bit g set when faces f and g share at least one vertex.
std::vector<Bits> intersection_table(const CombinatorialPolytope& p) {
  const auto F = static_cast<std::size_t>(p.face_count());
  std::vector<Bits> rows(F, Bits(F));
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    const auto& fs = p.vertex_faces(v);
    for (FaceId f : fs)
      for (FaceId g : fs)
        if (f != g) rows[f].set(g);
  }
  return rows;
}

std::vector<Bits> adjacency_table(const CombinatorialPolytope& p) {
  const auto F = static_cast<std::size_t>(p.face_count());
  std::vector<Bits> rows(F, Bits(F));
  for (FaceId f = 0; f < p.face_count(); ++f)
    for (FaceId g : p.edge_adjacent_faces(f)) rows[f].set(g);
  return rows;
}

std::vector<int> sorted_degrees(const CombinatorialPolytope& p) {
  std::vector<int> out;
  for (const auto& face : p.faces()) out.push_back(static_cast<int>(face.size()));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_tetrahedron(const CombinatorialPolytope& p) {
  return p.vertex_count() == 4 && p.face_count() == 4 && sorted_degrees(p) == std::vector<int>{3, 3, 3, 3};
}

bool is_triangular_prism(const CombinatorialPolytope& p) {
  return p.vertex_count() == 6 && p.face_count() == 5 &&
         sorted_degrees(p) == std::vector<int>{3, 3, 4, 4, 4};
}

std::vector<FaceId> all_faces(const CombinatorialPolytope& p) {
  std::vector<FaceId> out(p.face_count());
  for (FaceId f = 0; f < p.face_count(); ++f) out[f] = f;
  return out;
}

}  // namespace

const char* to_string(AndreevViolation kind) {
  switch (kind) {
    case AndreevViolation::Tetrahedron: return "Tetrahedron";
    case AndreevViolation::TriangularPrism: return "TriangularPrism";
    case AndreevViolation::OverfullVertex: return "OverfullVertex";
    case AndreevViolation::Condition3: return "Condition3";
    case AndreevViolation::Condition4: return "Condition4";
  }
  return "?";
}

const char* to_string(Realizability r) {
  switch (r) {
    case Realizability::CompactRA: return "CompactRA";
    case Realizability::IdealRA: return "IdealRA";
    case Realizability::MixedRA: return "MixedRA";
    case Realizability::NotRealizable: return "NotRealizable";
  }
  return "?";
}

std::string AndreevWitness::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  if (vertex) out << " vertex=" << *vertex;
  if (!faces.empty()) {
    out << " faces=";
    for (std::size_t i = 0; i < faces.size(); ++i) out << (i ? "," : "") << faces[i];
  }
  if (!edges.empty()) {
    out << " edges=";
    for (std::size_t i = 0; i < edges.size(); ++i)
      out << (i ? "," : "") << "(" << edges[i].a << "-" << edges[i].b << ")";
  }
  return out.str();
}

std::optional<AndreevWitness> check_condition3(const CombinatorialPolytope& p) {
  p.require_valid();
  const auto meets = intersection_table(p);
  for (FaceId f = 0; f < p.face_count(); ++f) {
    const auto& adj = p.edge_adjacent_faces(f);
    for (FaceId g1 : adj) {
      const Edge e1 = *p.shared_edge(f, g1);
      for (FaceId g2 : adj) {
        if (g2 == g1) continue;
        const Edge e2 = *p.shared_edge(f, g2);
        if (e1.touches(e2)) continue;
        if (meets[g1].test(g2)) {
          return AndreevWitness{AndreevViolation::Condition3, {f, g1, g2}, {e1, e2}, std::nullopt};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<AndreevWitness> check_condition4(const CombinatorialPolytope& p) {
  p.require_valid();
  const auto adjacent = adjacency_table(p);
  // The lexicographically first circuit starts at its smallest face, so only
  // circuits with f2, f3, f4 > f1 need visiting.
  for (FaceId f1 = 0; f1 < p.face_count(); ++f1) {
    for (FaceId f2 : p.edge_adjacent_faces(f1)) {
      if (f2 < f1) continue;
      const Edge e1 = *p.shared_edge(f1, f2);
      for (FaceId f3 : p.edge_adjacent_faces(f2)) {
        if (f3 <= f1) continue;
        const Edge e2 = *p.shared_edge(f2, f3);
        if (e1.touches(e2)) continue;
        // Candidates for f4 share an edge with both f3 and f1.
        Bits closing = adjacent[f3] & adjacent[f1];
        for (auto f4 = closing.find_next(static_cast<std::size_t>(f1)); f4 != Bits::npos; f4 = closing.find_next(f4)) {
          const auto g = static_cast<FaceId>(f4);
          if (g == f2) continue;
          const Edge e3 = *p.shared_edge(f3, g);
          const Edge e4 = *p.shared_edge(g, f1);
          if (e3.touches(e1) || e3.touches(e2) || e4.touches(e1) || e4.touches(e2) || e4.touches(e3)) {
            continue;
          }
          return AndreevWitness{AndreevViolation::Condition4, {f1, f2, f3, g}, {e1, e2, e3, e4}, std::nullopt};
        }
      }
    }
  }
  return std::nullopt;
}

RealizabilityClass classify(const CombinatorialPolytope& p) {
  p.require_valid();
  RealizabilityClass out;
  if (is_tetrahedron(p)) {
    out.witness = AndreevWitness{AndreevViolation::Tetrahedron, all_faces(p), {}, std::nullopt};
    return out;
  }
  if (is_triangular_prism(p)) {
    out.witness = AndreevWitness{AndreevViolation::TriangularPrism, all_faces(p), {}, std::nullopt};
    return out;
  }
  bool any_finite = false;
  bool any_ideal = false;
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    switch (p.kind(v)) {
      case VertexKind::Overfull:
        out.witness = AndreevWitness{AndreevViolation::OverfullVertex, p.vertex_faces(v), {}, v};
        return out;
      case VertexKind::Finite: any_finite = true; break;
      case VertexKind::Ideal: any_ideal = true; break;
    }
  }
  if (auto w = check_condition3(p)) {
    out.witness = std::move(w);
    return out;
  }
  if (auto w = check_condition4(p)) {
    out.witness = std::move(w);
    return out;
  }
  if (any_finite && any_ideal) {
    out.kind = Realizability::MixedRA;
  } else {
    out.kind = any_ideal ? Realizability::IdealRA : Realizability::CompactRA;
  }
  return out;
}

bool witness_holds(const CombinatorialPolytope& p, const AndreevWitness& w) {
  if (!p.valid()) return false;
  auto has = [&](FaceId f) { return p.has_face(f); };
  if (!std::all_of(w.faces.begin(), w.faces.end(), has)) return false;
  switch (w.kind) {
    case AndreevViolation::Tetrahedron: return is_tetrahedron(p);
    case AndreevViolation::TriangularPrism: return is_triangular_prism(p);
    case AndreevViolation::OverfullVertex:
      return w.vertex && p.has_vertex(*w.vertex) && p.valence(*w.vertex) >= 5;
    case AndreevViolation::Condition3: {
      if (w.faces.size() != 3) return false;
      auto e1 = p.shared_edge(w.faces[0], w.faces[1]);
      auto e2 = p.shared_edge(w.faces[0], w.faces[2]);
      return e1 && e2 && !e1->touches(*e2) && p.faces_intersect(w.faces[1], w.faces[2]);
    }
    case AndreevViolation::Condition4: {
      if (w.faces.size() != 4) return false;
      std::vector<Edge> es;
      for (int i = 0; i < 4; ++i) {
        auto e = p.shared_edge(w.faces[i], w.faces[(i + 1) % 4]);
        if (!e) return false;
        es.push_back(*e);
      }
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (es[i].touches(es[j])) return false;
      return true;
    }
  }
  return false;
}

}  // namespace rahp
