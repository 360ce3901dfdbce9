#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace rahp {

using VertexId = int;
using FaceId = int;
using Face = std::vector<VertexId>;
using Rational = boost::rational<std::int64_t>;

/// Unordered vertex pair, stored with first < second.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool touches(const Edge& other) const {
    return a == other.a || a == other.b || b == other.a || b == other.b;
  }
  bool has(VertexId v) const { return a == v || b == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class VertexKind { Finite, Ideal, Overfull };

const char* to_string(VertexKind kind);

struct Violation {
  std::string invariant;
  std::string detail;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Raised when an operation receives a polytope that failed validation,
/// or when a construction produces one.
class InvalidPolytope : public std::invalid_argument {
 public:
  InvalidPolytope(const std::string& what, ValidationResult result = {})
      : std::invalid_argument(what), result_(std::move(result)) {}
  const ValidationResult& result() const { return result_; }

 private:
  ValidationResult result_;
};

struct IncidenceProfile {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  std::map<int, std::int64_t> face_degrees;  // k -> p_k
  std::vector<int> valence;                  // incident-face count per vertex
  std::int64_t finite_vertices = 0;          // trivalent
  std::int64_t ideal_vertices = 0;           // 4-valent
  std::int64_t overfull_vertices = 0;

  std::int64_t p(int k) const {
    auto it = face_degrees.find(k);
    return it == face_degrees.end() ? 0 : it->second;
  }
  int max_face_degree() const {
    return face_degrees.empty() ? 0 : face_degrees.rbegin()->first;
  }
  bool all_ideal() const { return ideal_vertices == vertices; }
  bool all_finite() const { return finite_vertices == vertices; }
};

/// Combinatorial type of a 3-polytope given by its face cycles.
///
/// The incidence structure (edges, vertex stars, face adjacency) and the
/// validation verdict are computed once at construction; the object is
/// immutable afterwards. Construction never throws on malformed input: the
/// defects are recorded and every counting operation refuses an invalid
/// polytope with InvalidPolytope("unvalidated input").
class CombinatorialPolytope {
 public:
  CombinatorialPolytope() = default;
  CombinatorialPolytope(std::string name, std::vector<Face> faces);

  const std::string& name() const { return name_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const;
  int face_count() const { return static_cast<int>(faces_.size()); }
  int vertex_count() const { return vertex_count_; }
  int degree(FaceId f) const { return static_cast<int>(face(f).size()); }

  const ValidationResult& validation() const { return validation_; }
  bool valid() const { return validation_.ok(); }
  /// Throws InvalidPolytope unless valid().
  void require_valid() const;

  /// Sorted list of distinct edges.
  const std::vector<Edge>& edges() const { return edges_; }
  /// The faces containing each edge (two for a valid polytope), parallel to edges().
  const std::vector<std::vector<FaceId>>& edge_faces() const { return edge_faces_; }
  std::optional<int> edge_index(Edge e) const;

  /// Faces containing v, in increasing id order.
  const std::vector<FaceId>& vertex_faces(VertexId v) const;
  /// Vertices joined to v by an edge, in increasing id order.
  const std::vector<VertexId>& vertex_neighbours(VertexId v) const;
  int valence(VertexId v) const { return static_cast<int>(vertex_faces(v).size()); }
  VertexKind kind(VertexId v) const;

  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count_; }
  bool has_face(FaceId f) const { return f >= 0 && f < face_count(); }
  bool face_contains(FaceId f, VertexId v) const;
  /// Faces sharing an edge with f, increasing.
  const std::vector<FaceId>& edge_adjacent_faces(FaceId f) const { return face_adjacent_.at(f); }
  /// The edge shared by faces f and g, if any.
  std::optional<Edge> shared_edge(FaceId f, FaceId g) const;
  bool faces_intersect(FaceId f, FaceId g) const;

 private:
  void build();
  void validate_structure();
  int shared_edge_multiplicity(FaceId f, FaceId g) const;

  std::string name_;
  std::vector<Face> faces_;
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<FaceId>> edge_faces_;
  std::vector<std::vector<FaceId>> vertex_faces_;
  std::vector<std::vector<VertexId>> vertex_neighbours_;
  std::vector<std::vector<FaceId>> face_adjacent_;
  std::vector<std::vector<std::pair<Edge, int>>> face_adjacent_edges_;  // parallel to face_adjacent_
  ValidationResult validation_;
};

ValidationResult validate(const CombinatorialPolytope& p);

IncidenceProfile profile(const CombinatorialPolytope& p);

/// Vertices sharing a face with v but not an edge.
int quasi_adjacent_count(const CombinatorialPolytope& p, VertexId v);

/// Average of quasi_adjacent_count by direct summation. Requires all vertices ideal.
Rational avg_quasi_adjacent(const CombinatorialPolytope& p);

/// 4 - 24/V + (1/V) sum_{k>=5} (k^2 - 7k + 12) p_k.
Rational avg_quasi_adjacent_closed_form(const IncidenceProfile& profile);

/// The four faces around an edge with trivalent endpoints: the two faces
/// containing it, then the third face at e.a and the third face at e.b.
std::array<FaceId, 4> faces_around_edge(const CombinatorialPolytope& p, Edge e);

/// Number of vertices quasi-incident to e, counted directly. Requires both
/// endpoints trivalent.
int quasi_incident_vertices(const CombinatorialPolytope& p, Edge e);

/// k_1 + k_2 + k_3 + k_4 over faces_around_edge.
int edge_face_degree_sum(const CombinatorialPolytope& p, Edge e);

/// Direct average of quasi_incident_vertices over all edges.
Rational avg_quasi_incident(const CombinatorialPolytope& p);

/// 14 - 120/E + (2/E) sum_{k>=7} (k^2 - 11k + 30) p_k, for compact P.
/// Equals 2/E sum k^2 p_k - 10 once p_5 and p_6 are eliminated.
Rational avg_quasi_incident_closed_form(const IncidenceProfile& profile);

/// Distinct faces other than f sharing at least one vertex with f.
int face_neighbours(const CombinatorialPolytope& p, FaceId f);

/// (8 V_inf + 3 V_F) / (V_inf + V_F/2 + 2). Rejects overfull vertices.
Rational avg_face_neighbours(const CombinatorialPolytope& p);

/// Direct average of face_neighbours over all faces.
Rational avg_face_neighbours_direct(const CombinatorialPolytope& p);

/// True if f and v are not incident but some face through v shares an edge with f.
bool face_quasi_incident(const CombinatorialPolytope& p, FaceId f, VertexId v);

/// Vertices incident or quasi-incident to face f, increasing.
std::vector<VertexId> incident_or_quasi_incident_vertices(const CombinatorialPolytope& p, FaceId f);

/// Smallest vertex with no incident or quasi-incident triangular face.
std::optional<VertexId> triangle_free_vertex(const CombinatorialPolytope& p);

}  // namespace rahp
