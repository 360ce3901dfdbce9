#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rahp/andreev.hpp"
#include "rahp/lobachevsky.hpp"
#include "rahp/polytope.hpp"
#include "rahp/surgery.hpp"

namespace rahp {

/// Every volume bound the library evaluates, in report order.
enum class BoundId {
  IdealLowerAtkinson,
  IdealUpperAtkinson,
  IdealUpperV9,
  IdealUpperLarge,     // V > 24
  IdealUpperKGon,      // via a k-gonal face
  IdealUpperTriQuad,   // only 3- and 4-gonal faces, V >= 73
  IdealApexVertex,     // best vertex-cone decomposition
  IdealApexFace,       // best face-cone decomposition
  CompactLowerAtkinson,
  CompactUpperAtkinson,
  CompactUpperV24,
  CompactUpperLarge,   // V > 80
  CompactUpperKGon,    // via a k-gonal face, k >= 5
  CompactUpperFaceTriple,
  MixedLowerAtkinson,
  MixedUpperAtkinson,
  MixedUpperImproved,  // V_inf + V_F > 15
};

inline constexpr int kBoundCount = 17;

struct BoundInfo {
  BoundId id;
  const char* key;     // stable column name
  const char* source;  // where the inequality comes from
  bool upper;
  bool strict;         // printed as '<' rather than '<='
};

const BoundInfo& bound_info(BoundId id);
const std::vector<BoundInfo>& all_bounds();

struct BoundEntry {
  BoundId id{};
  bool applicable = false;
  std::string reason;                    // why inapplicable, or a note
  std::optional<ErrBoundedValue> value;  // set iff applicable
  int k = 0;                             // face degree used, where relevant
};

struct TwoSided {
  ErrBoundedValue lower;
  ErrBoundedValue upper;
};

/// (v8/4) V - v8/2 <= Vol <= (v8/2) V - 2 v8, for V >= 6.
TwoSided ideal_atkinson(long V);

/// (v8/2) V - (5/2) v8, for V >= 9.
ErrBoundedValue ideal_upper_v9(long V);

/// The three refined ideal upper bounds, applicable or not:
/// V > 24 gives (v8/2)V - 3 v8; a k-gonal face gives (v8/2)V - ((k+5)/4) v8;
/// only 3/4-gonal faces with V >= 73 gives (v8/2)V - (9 v8 - 20 v3).
std::vector<BoundEntry> ideal_upper_refined(long V, int max_face_k, bool only_tri_quad_faces);

/// (V - 4 - m/2) v8/2 with m the quasi-adjacency count of the apex.
ErrBoundedValue apex_vertex_bound(const CombinatorialPolytope& p, VertexId apex);

struct ApexFaceBound {
  ErrBoundedValue value;
  /// Some face not through the apex shares edges with two faces through it,
  /// so the projection of the apex onto it may fall on its boundary.
  bool degenerate_projection = false;
};

/// Sum over faces missing the apex: (k-1) L(pi/(2k-2)) for faces quasi-incident
/// to it, k L(pi/k) otherwise.
ApexFaceBound apex_face_bound(const CombinatorialPolytope& p, VertexId apex);

enum class ApexMethod { Vertex, Face };
const char* to_string(ApexMethod m);

struct ApexBound {
  VertexId apex = 0;
  ApexMethod method = ApexMethod::Vertex;
  ErrBoundedValue value;
  bool degenerate_projection = false;
};

/// Minimum over apexes of one method.
ApexBound best_apex_bound(const CombinatorialPolytope& p, ApexMethod method);
/// Minimum over all apexes and both methods; ties go to the smaller vertex,
/// then to the vertex method.
ApexBound best_apex_bound(const CombinatorialPolytope& p);

/// Compact bounds for V = 20 or V >= 24: Atkinson lower and upper, the
/// V >= 24 bound, the V > 80 bound, and the k-gonal face bound (k >= 5).
std::vector<BoundEntry> compact_bounds(long V, int max_face_k);

/// (V - k1 - k2 - k3 + 4) 5 v3 / 8 for faces f1, f2, f3 with f2 meeting both
/// others in edges. Requires V >= 20 and every k >= 5.
ErrBoundedValue face_triple_bound(long V, int k1, int k2, int k3);

struct FaceTriple {
  FaceId f1 = 0, f2 = 0, f3 = 0;
  int k_sum = 0;
};

/// Distinct f1, f3 both sharing an edge with f2, maximising k1 + k2 + k3;
/// lexicographically first among maximisers.
std::optional<FaceTriple> best_face_triple(const CombinatorialPolytope& p);

/// Mixed bounds: Atkinson lower and upper, plus the improved upper bound
/// when V_inf + V_F > 15.
std::vector<BoundEntry> mixed_bounds(long V_inf, long V_F);

/// c_i = v8 / 2^(i+1) k_inf + 5 v3 / 2^(i+2) k_F for doubling stage i >= 1.
ErrBoundedValue chain_term(int i, int k_ideal, int k_finite);

/// Atkinson's mixed upper bound pulled back through a doubling chain:
/// (v8/2) V_inf + (5 v3/8) V_F - sum c_i - v8 / 2^(n+1).
ErrBoundedValue chain_upper_bound(long V_inf, long V_F, const std::vector<DoublingStage>& stages);

struct BoundReport {
  Realizability realizability = Realizability::NotRealizable;
  std::vector<BoundEntry> entries;  // one per BoundId, in declaration order
  std::optional<std::size_t> best_upper;
  std::optional<std::size_t> best_lower;
  std::optional<ApexBound> apex;  // ideal polytopes only
  std::optional<FaceTriple> triple;  // compact polytopes only

  const BoundEntry& entry(BoundId id) const { return entries.at(static_cast<std::size_t>(id)); }
};

/// Evaluates every bound against p. Throws std::invalid_argument unless p is
/// realizable.
BoundReport bound_report(const CombinatorialPolytope& p);
BoundReport bound_report(const CombinatorialPolytope& p, const RealizabilityClass& cls);

}  // namespace rahp
