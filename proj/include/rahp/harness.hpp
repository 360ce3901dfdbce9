#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rahp/andreev.hpp"
#include "rahp/lobachevsky.hpp"
#include "rahp/polytope.hpp"
#include "rahp/surgery.hpp"

namespace rahp {

enum class Verdict { Holds, Fails, NotApplicable };

const char* to_string(Verdict v);

/// Outcome of checking one combinatorial claim on one polytope.
struct ClaimResult {
  std::string claim;
  std::string entry;
  Verdict verdict = Verdict::NotApplicable;
  std::string witness;  // certifying vertex / edge / face, or counterexample
  std::string detail;

  std::string line() const;
};

struct CatalogEntry {
  CombinatorialPolytope polytope;
  std::string population;
  std::optional<ErrBoundedValue> known_volume;
};

enum class Suite { Ideal, Compact, Mixed, All };

Suite suite_from_string(const std::string& s);

/// A(n) for 3 <= n <= 50, the octahedron chain to depth 5, and doubles of
/// each A(n) along a base and along a lateral triangle.
std::vector<CatalogEntry> ideal_catalog();

/// L(n) for 5 <= n <= 50 and their doubles along a base and along a pentagon.
std::vector<CatalogEntry> compact_catalog();

/// Polytopes with both vertex kinds, built by contracting edges of Loebell
/// polytopes into ideal vertices, plus their doubles.
std::vector<CatalogEntry> mixed_catalog();

std::vector<CatalogEntry> catalog(Suite suite);

/// Merges every realizable polytope of `extra` into the given ordering: each
/// is tagged with the population "user".
std::vector<CatalogEntry> user_entries(const std::vector<CombinatorialPolytope>& extra);

/// Identifies a vertex into a neighbour; faces losing a vertex shrink.
CombinatorialPolytope contract_edges(const CombinatorialPolytope& p, const std::vector<Edge>& edges,
                                     std::string name);

// Individual claims. Each returns NotApplicable outside its hypotheses.

/// Ideal, V > 24: a vertex with at least 4 quasi-adjacent vertices, and the
/// average is at least 4 - 24/V > 3.
ClaimResult verify_quasi_adjacent_vertex(const CombinatorialPolytope& p, const RealizabilityClass& cls);

/// Ideal, V > 72, only 3/4-gonal faces: a vertex without incident or
/// quasi-incident triangles; each triangle touches at most 9 vertices.
ClaimResult verify_triangle_free_vertex(const CombinatorialPolytope& p, const RealizabilityClass& cls);

/// Compact, V > 80: an edge with at least 14 quasi-incident vertices (face
/// degrees around it sum to at least 24), and the average identity.
ClaimResult verify_fat_edge(const CombinatorialPolytope& p, const RealizabilityClass& cls);

/// Face-neighbour statements; part 1: V_F + V_inf > 15 and V_inf >= 1 give a
/// face with >= 6 neighbours; part 2: V_F + V_inf > 14 and V_inf >= 3 give a
/// face with >= 7 neighbours or five faces with >= 6; part 3: V_inf >= 6 and a
/// face with <= 5 neighbours give a face with >= 7.
ClaimResult verify_face_neighbours(const CombinatorialPolytope& p, const RealizabilityClass& cls, int part);

/// Mixed, V_inf + V_F > 14: N_6 holds a face that is not an ideal triangle.
ClaimResult verify_n6_non_ideal_triangle(const CombinatorialPolytope& p, const RealizabilityClass& cls);

/// The N_6 statement at every stage of a doubling chain.
std::vector<ClaimResult> verify_chain_n6(const DoublingChain& chain);

/// Euler and p_k identities plus the three averaging identities, exactly.
std::vector<ClaimResult> verify_identities(const CombinatorialPolytope& p, const RealizabilityClass& cls);

/// Expected class for generated families, p_3 = p_4 = 0 when compact, every
/// face with >= 5 neighbours, at least 6 faces.
ClaimResult verify_realizability(const CatalogEntry& entry, const RealizabilityClass& cls);

/// Doubling along every face: vertex-count contracts, validity, realizability
/// and preservation of vertex kinds.
ClaimResult verify_doubling_contracts(const CombinatorialPolytope& p, const RealizabilityClass& cls);

/// Known volume within [best_lower, best_upper] up to the combined error.
ClaimResult verify_bound_soundness(const CatalogEntry& entry, const RealizabilityClass& cls);
std::vector<ClaimResult> verify_bound_soundness(const std::vector<CatalogEntry>& entries);

/// Every claim on every entry, in catalog order.
std::vector<ClaimResult> run_suite(const std::vector<CatalogEntry>& entries);

struct SuiteSummary {
  int holds = 0;
  int fails = 0;
  int not_applicable = 0;
};
SuiteSummary summarize(const std::vector<ClaimResult>& results);

}  // namespace rahp
