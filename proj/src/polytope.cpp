#include "rahp/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rahp {

namespace {

std::string edge_str(Edge e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Number of connected components of an undirected graph given as adjacency lists.
int component_count(const std::vector<std::vector<int>>& adj) {
  std::vector<int> seen(adj.size(), 0);
  int components = 0;
  std::vector<int> stack;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(static_cast<int>(s));
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

}  // namespace

const char* to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Finite: return "finite";
    case VertexKind::Ideal: return "ideal";
    case VertexKind::Overfull: return "overfull";
  }
  return "?";
}

std::string ValidationResult::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].invariant << ": " << violations[i].detail;
  }
  return out.str();
}

CombinatorialPolytope::CombinatorialPolytope(std::string name, std::vector<Face> faces)
    : name_(std::move(name)), faces_(std::move(faces)) {
  build();
  validate_structure();
}

const Face& CombinatorialPolytope::face(FaceId f) const {
  if (!has_face(f)) throw std::out_of_range("unknown face id " + std::to_string(f));
  return faces_[f];
}

void CombinatorialPolytope::require_valid() const {
  if (!valid()) throw InvalidPolytope("unvalidated input", validation_);
}

std::optional<int> CombinatorialPolytope::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

const std::vector<FaceId>& CombinatorialPolytope::vertex_faces(VertexId v) const {
  if (!has_vertex(v)) throw std::out_of_range("unknown vertex id " + std::to_string(v));
  return vertex_faces_[v];
}

const std::vector<VertexId>& CombinatorialPolytope::vertex_neighbours(VertexId v) const {
  if (!has_vertex(v)) throw std::out_of_range("unknown vertex id " + std::to_string(v));
  return vertex_neighbours_[v];
}

VertexKind CombinatorialPolytope::kind(VertexId v) const {
  int n = valence(v);
  if (n <= 3) return VertexKind::Finite;
  if (n == 4) return VertexKind::Ideal;
  return VertexKind::Overfull;
}

bool CombinatorialPolytope::face_contains(FaceId f, VertexId v) const {
  const auto& fs = vertex_faces(v);
  return std::binary_search(fs.begin(), fs.end(), f);
}

std::optional<Edge> CombinatorialPolytope::shared_edge(FaceId f, FaceId g) const {
  const auto& adj = face_adjacent_.at(f);
  const auto it = std::lower_bound(adj.begin(), adj.end(), g);
  if (it == adj.end() || *it != g) return std::nullopt;
  return face_adjacent_edges_[f][it - adj.begin()].first;
}

int CombinatorialPolytope::shared_edge_multiplicity(FaceId f, FaceId g) const {
  const auto& adj = face_adjacent_.at(f);
  const auto it = std::lower_bound(adj.begin(), adj.end(), g);
  if (it == adj.end() || *it != g) return 0;
  return face_adjacent_edges_[f][it - adj.begin()].second;
}

bool CombinatorialPolytope::faces_intersect(FaceId f, FaceId g) const {
  const Face& small = degree(f) <= degree(g) ? faces_[f] : faces_[g];
  FaceId other = degree(f) <= degree(g) ? g : f;
  return std::any_of(small.begin(), small.end(), [&](VertexId v) { return face_contains(other, v); });
}

void CombinatorialPolytope::build() {
  int max_id = -1;
  for (const auto& face : faces_) {
    for (VertexId v : face) {
      if (v < 0) {
        validation_.violations.push_back(
            {"negative vertex id", "face contains id " + std::to_string(v)});
        faces_.clear();
        return;
      }
      max_id = std::max(max_id, v);
    }
  }
  vertex_count_ = max_id + 1;
  vertex_faces_.assign(vertex_count_, {});
  vertex_neighbours_.assign(vertex_count_, {});
  face_adjacent_.assign(faces_.size(), {});

  std::vector<std::pair<Edge, FaceId>> sides;
  for (FaceId f = 0; f < face_count(); ++f) {
    const Face& face = faces_[f];
    const std::size_t k = face.size();
    for (std::size_t i = 0; i < k; ++i) {
      vertex_faces_[face[i]].push_back(f);
      VertexId u = face[i];
      VertexId w = face[(i + 1) % k];
      if (u != w) sides.emplace_back(Edge(u, w), f);
    }
  }
  for (auto& fs : vertex_faces_) sort_unique(fs);
  std::sort(sides.begin(), sides.end());

  std::vector<std::vector<std::pair<FaceId, Edge>>> across(faces_.size());
  for (std::size_t i = 0; i < sides.size();) {
    std::size_t j = i;
    std::vector<FaceId> fs;
    while (j < sides.size() && sides[j].first == sides[i].first) fs.push_back(sides[j++].second);
    const Edge e = sides[i].first;
    edges_.push_back(e);
    vertex_neighbours_[e.a].push_back(e.b);
    vertex_neighbours_[e.b].push_back(e.a);
    for (std::size_t a = 0; a < fs.size(); ++a) {
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        if (fs[a] == fs[b]) continue;
        across[fs[a]].emplace_back(fs[b], e);
        across[fs[b]].emplace_back(fs[a], e);
      }
    }
    edge_faces_.push_back(std::move(fs));
    i = j;
  }
  // edges are visited in sorted order, so a stable sort keeps the smallest
  // shared edge first when two faces (invalidly) share several
  face_adjacent_edges_.resize(faces_.size());
  for (std::size_t f = 0; f < across.size(); ++f) {
    auto& list = across[f];
    std::stable_sort(list.begin(), list.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [g, e] : list) {
      if (!face_adjacent_[f].empty() && face_adjacent_[f].back() == g) {
        ++face_adjacent_edges_[f].back().second;
        continue;
      }
      face_adjacent_[f].push_back(g);
      face_adjacent_edges_[f].push_back({e, 1});
    }
  }
  for (auto& ns : vertex_neighbours_) sort_unique(ns);
}

void CombinatorialPolytope::validate_structure() {
  auto& out = validation_.violations;
  if (!out.empty()) return;
  if (faces_.empty()) {
    out.push_back({"no faces", "polytope has no faces"});
    return;
  }

  for (FaceId f = 0; f < face_count(); ++f) {
    const Face& face = faces_[f];
    if (face.size() < 3) {
      out.push_back({"face has fewer than 3 vertices", "face " + std::to_string(f)});
    }
    Face sorted = face;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      out.push_back({"vertex repeated in face",
                     "face " + std::to_string(f) + " repeats vertex " + std::to_string(*dup)});
    }
  }

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edge_faces_[i].size() != 2) {
      out.push_back({"edge not in exactly 2 faces",
                     "edge " + edge_str(edges_[i]) + " lies in " +
                         std::to_string(edge_faces_[i].size()) + " face(s)"});
    }
  }

  bool vertices_ok = true;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    const auto& fs = vertex_faces_[v];
    if (fs.empty()) {
      out.push_back({"vertex not on any face", "vertex " + std::to_string(v)});
      vertices_ok = false;
      continue;
    }
    if (fs.size() < 3) {
      out.push_back({"vertex valence below 3",
                     "vertex " + std::to_string(v) + " lies in " + std::to_string(fs.size()) +
                         " face(s)"});
      vertices_ok = false;
      continue;
    }
    // Link graph at v: faces through v joined when they share an edge at v.
    std::map<FaceId, std::vector<FaceId>> link;
    for (VertexId w : vertex_neighbours_[v]) {
      auto idx = edge_index(Edge(v, w));
      const auto& ef = edge_faces_[*idx];
      if (ef.size() == 2) {
        link[ef[0]].push_back(ef[1]);
        link[ef[1]].push_back(ef[0]);
      }
    }
    bool cycle = link.size() == fs.size();
    for (const auto& [f, ns] : link) cycle = cycle && ns.size() == 2;
    if (cycle) {
      // Walk the cycle from its first face and count the faces visited.
      FaceId start = link.begin()->first;
      FaceId prev = -1;
      FaceId cur = start;
      std::size_t steps = 0;
      do {
        const auto& ns = link[cur];
        FaceId next = ns[0] != prev ? ns[0] : ns[1];
        prev = cur;
        cur = next;
        ++steps;
      } while (cur != start && steps <= fs.size());
      cycle = steps == fs.size();
    }
    if (!cycle) {
      out.push_back({"faces around vertex do not form a single cycle", "vertex " + std::to_string(v)});
      vertices_ok = false;
    }
  }

  const auto V = static_cast<long>(vertex_count_);
  const auto E = static_cast<long>(edges_.size());
  const auto F = static_cast<long>(faces_.size());
  if (V - E + F != 2) {
    out.push_back({"Euler relation fails", "V - E + F = " + std::to_string(V) + " - " +
                                               std::to_string(E) + " + " + std::to_string(F) +
                                               " = " + std::to_string(V - E + F)});
  }

  // Two faces of a polytope meet in nothing, one vertex, or one edge.
  std::vector<std::pair<FaceId, FaceId>> pairs;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    const auto& fs = vertex_faces_[v];
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j) pairs.emplace_back(fs[i], fs[j]);
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    const auto count = j - i;
    const auto [f, g] = pairs[i];
    i = j;
    if (count < 2) continue;
    if (count == 2 && shared_edge_multiplicity(f, g) == 1) continue;
    out.push_back({"faces intersect improperly", "faces " + std::to_string(f) + " and " + std::to_string(g) +
                                                     " share " + std::to_string(count) + " vertices"});
  }

  if (component_count(face_adjacent_) != 1) {
    out.push_back({"face adjacency graph disconnected", ""});
  }
  if (vertices_ok && component_count(vertex_neighbours_) != 1) {
    out.push_back({"1-skeleton disconnected", ""});
  }
}

ValidationResult validate(const CombinatorialPolytope& p) { return p.validation(); }

IncidenceProfile profile(const CombinatorialPolytope& p) {
  p.require_valid();
  IncidenceProfile prof;
  prof.vertices = p.vertex_count();
  prof.edges = static_cast<std::int64_t>(p.edges().size());
  prof.faces = p.face_count();
  for (const auto& face : p.faces()) ++prof.face_degrees[static_cast<int>(face.size())];
  prof.valence.reserve(p.vertex_count());
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    prof.valence.push_back(p.valence(v));
    switch (p.kind(v)) {
      case VertexKind::Finite: ++prof.finite_vertices; break;
      case VertexKind::Ideal: ++prof.ideal_vertices; break;
      case VertexKind::Overfull: ++prof.overfull_vertices; break;
    }
  }
  return prof;
}

int quasi_adjacent_count(const CombinatorialPolytope& p, VertexId v) {
  p.require_valid();
  if (!p.has_vertex(v)) throw std::out_of_range("unknown vertex id " + std::to_string(v));
  std::vector<VertexId> cofacial;
  for (FaceId f : p.vertex_faces(v)) {
    const Face& face = p.face(f);
    cofacial.insert(cofacial.end(), face.begin(), face.end());
  }
  sort_unique(cofacial);
  const auto& adj = p.vertex_neighbours(v);
  int count = 0;
  for (VertexId w : cofacial) {
    if (w != v && !std::binary_search(adj.begin(), adj.end(), w)) ++count;
  }
  return count;
}

Rational avg_quasi_adjacent(const CombinatorialPolytope& p) {
  p.require_valid();
  const auto prof = profile(p);
  if (!prof.all_ideal()) throw std::invalid_argument("formula requires all-ideal polytope");
  std::int64_t total = 0;
  for (VertexId v = 0; v < p.vertex_count(); ++v) total += quasi_adjacent_count(p, v);
  return Rational(total, prof.vertices);
}

Rational avg_quasi_adjacent_closed_form(const IncidenceProfile& prof) {
  std::int64_t correction = 0;
  for (const auto& [k, count] : prof.face_degrees) {
    if (k >= 5) correction += (std::int64_t{k} * k - 7 * k + 12) * count;
  }
  return Rational(4) - Rational(24, prof.vertices) + Rational(correction, prof.vertices);
}

std::array<FaceId, 4> faces_around_edge(const CombinatorialPolytope& p, Edge e) {
  p.require_valid();
  auto idx = p.edge_index(e);
  if (!idx) throw std::out_of_range("not an edge " + edge_str(e));
  if (p.valence(e.a) != 3 || p.valence(e.b) != 3) {
    throw std::invalid_argument("edge quasi-incidence defined for compact polytopes");
  }
  const auto& containing = p.edge_faces()[*idx];
  auto third = [&](VertexId v) {
    for (FaceId f : p.vertex_faces(v)) {
      if (f != containing[0] && f != containing[1]) return f;
    }
    throw std::logic_error("trivalent vertex without a third face");
  };
  return {containing[0], containing[1], third(e.a), third(e.b)};
}

int quasi_incident_vertices(const CombinatorialPolytope& p, Edge e) {
  faces_around_edge(p, e);  // precondition checks
  std::vector<VertexId> near;
  for (VertexId end : {e.a, e.b}) {
    for (FaceId f : p.vertex_faces(end)) {
      const Face& face = p.face(f);
      near.insert(near.end(), face.begin(), face.end());
    }
  }
  sort_unique(near);
  return static_cast<int>(
      std::count_if(near.begin(), near.end(), [&](VertexId w) { return !e.has(w); }));
}

int edge_face_degree_sum(const CombinatorialPolytope& p, Edge e) {
  int sum = 0;
  for (FaceId f : faces_around_edge(p, e)) sum += p.degree(f);
  return sum;
}

Rational avg_quasi_incident(const CombinatorialPolytope& p) {
  p.require_valid();
  std::int64_t total = 0;
  for (const Edge& e : p.edges()) total += quasi_incident_vertices(p, e);
  return Rational(total, static_cast<std::int64_t>(p.edges().size()));
}

Rational avg_quasi_incident_closed_form(const IncidenceProfile& prof) {
  std::int64_t correction = 0;
  for (const auto& [k, count] : prof.face_degrees) {
    if (k >= 7) correction += (std::int64_t{k} * k - 11 * k + 30) * count;
  }
  return Rational(14) - Rational(120, prof.edges) + Rational(2 * correction, prof.edges);
}

int face_neighbours(const CombinatorialPolytope& p, FaceId f) {
  p.require_valid();
  std::vector<FaceId> around;
  for (VertexId v : p.face(f)) {
    const auto& fs = p.vertex_faces(v);
    around.insert(around.end(), fs.begin(), fs.end());
  }
  sort_unique(around);
  return static_cast<int>(around.size()) - 1;
}

Rational avg_face_neighbours(const CombinatorialPolytope& p) {
  const auto prof = profile(p);
  if (prof.overfull_vertices > 0) throw std::invalid_argument("overfull vertex present");
  return Rational(16 * prof.ideal_vertices + 6 * prof.finite_vertices,
                  2 * prof.ideal_vertices + prof.finite_vertices + 4);
}

Rational avg_face_neighbours_direct(const CombinatorialPolytope& p) {
  p.require_valid();
  std::int64_t total = 0;
  for (FaceId f = 0; f < p.face_count(); ++f) total += face_neighbours(p, f);
  return Rational(total, p.face_count());
}

bool face_quasi_incident(const CombinatorialPolytope& p, FaceId f, VertexId v) {
  p.require_valid();
  if (p.face_contains(f, v)) return false;
  const auto& adj = p.edge_adjacent_faces(f);
  for (FaceId g : p.vertex_faces(v)) {
    if (std::binary_search(adj.begin(), adj.end(), g)) return true;
  }
  return false;
}

std::vector<VertexId> incident_or_quasi_incident_vertices(const CombinatorialPolytope& p, FaceId f) {
  p.require_valid();
  std::vector<VertexId> out = p.face(f);
  for (FaceId g : p.edge_adjacent_faces(f)) {
    const Face& face = p.face(g);
    out.insert(out.end(), face.begin(), face.end());
  }
  sort_unique(out);
  return out;
}

std::optional<VertexId> triangle_free_vertex(const CombinatorialPolytope& p) {
  p.require_valid();
  std::vector<char> touched(p.vertex_count(), 0);
  for (FaceId f = 0; f < p.face_count(); ++f) {
    if (p.degree(f) != 3) continue;
    for (VertexId v : incident_or_quasi_incident_vertices(p, f)) touched[v] = 1;
  }
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    if (!touched[v]) return v;
  }
  return std::nullopt;
}

}  // namespace rahp
