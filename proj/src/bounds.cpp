#include "rahp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

namespace rahp {

namespace {

constexpr double kPi = std::numbers::pi;

// Relative tolerance under which two bound values count as tied.
constexpr double kTieTolerance = 1e-12;

const std::vector<BoundInfo> kBounds = {
    {BoundId::IdealLowerAtkinson, "ideal_lower_atkinson", "Atkinson ideal lower bound, sharp at the octahedron", false, false},
    {BoundId::IdealUpperAtkinson, "ideal_upper_atkinson", "Atkinson ideal upper bound, sharp at the octahedron", true, false},
    {BoundId::IdealUpperV9, "ideal_upper_v9", "ideal upper bound for V >= 9, sharp at the doubled octahedron", true, false},
    {BoundId::IdealUpperLarge, "ideal_upper_v_gt_24", "ideal upper bound for V > 24 (vertex with 4 quasi-adjacent vertices)", true, false},
    {BoundId::IdealUpperKGon, "ideal_upper_kgon", "ideal upper bound from a k-gonal face", true, false},
    {BoundId::IdealUpperTriQuad, "ideal_upper_tri_quad", "ideal upper bound for 3/4-gonal faces only, V >= 73", true, false},
    {BoundId::IdealApexVertex, "ideal_apex_vertex", "vertex-cone decomposition from the best apex", true, false},
    {BoundId::IdealApexFace, "ideal_apex_face", "face-cone decomposition from the best apex", true, false},
    {BoundId::CompactLowerAtkinson, "compact_lower_atkinson", "Atkinson compact lower bound", false, false},
    {BoundId::CompactUpperAtkinson, "compact_upper_atkinson", "Atkinson compact upper bound", true, true},
    {BoundId::CompactUpperV24, "compact_upper_v24", "compact upper bound for V >= 24 (dodecahedron excluded)", true, false},
    {BoundId::CompactUpperLarge, "compact_upper_v_gt_80", "compact upper bound for V > 80 (doubling along a fat edge)", true, false},
    {BoundId::CompactUpperKGon, "compact_upper_kgon", "compact upper bound from a k-gonal face, k >= 5", true, false},
    {BoundId::CompactUpperFaceTriple, "compact_upper_face_triple", "compact upper bound from three faces f1-f2-f3 chained by edges", true, false},
    {BoundId::MixedLowerAtkinson, "mixed_lower_atkinson", "Atkinson lower bound with ideal and finite vertices", false, false},
    {BoundId::MixedUpperAtkinson, "mixed_upper_atkinson", "Atkinson upper bound with ideal and finite vertices", true, true},
    {BoundId::MixedUpperImproved, "mixed_upper_improved", "improved upper bound for V_inf + V_F > 15 (iterated doubling)", true, true},
};

BoundEntry applicable(BoundId id, ErrBoundedValue value, int k = 0) {
  return {id, true, {}, value, k};
}

BoundEntry inapplicable(BoundId id, std::string reason, int k = 0) {
  return {id, false, std::move(reason), std::nullopt, k};
}

// (v8/2) V, the leading term of every ideal upper bound.
ErrBoundedValue half_v8_times(long V) { return (0.5 * static_cast<double>(V)) * v8(); }

// (5 v3 / 8) V.
ErrBoundedValue five_eighths_v3_times(long V) { return (0.625 * static_cast<double>(V)) * v3(); }

void require_ideal(const CombinatorialPolytope& p) {
  const auto prof = profile(p);
  if (!prof.all_ideal()) throw std::invalid_argument("apex bounds require an ideal polytope");
}

// L(pi / m), memoised per call site.
class LobachevskyAtPiOver {
 public:
  ErrBoundedValue operator()(int m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    const auto value = lobachevsky(Angle{kPi / m}, 2.0 * std::numeric_limits<double>::epsilon());
    cache_.emplace(m, value);
    return value;
  }

 private:
  std::map<int, ErrBoundedValue> cache_;
};

ApexFaceBound apex_face_bound_impl(const CombinatorialPolytope& p, VertexId apex, LobachevskyAtPiOver& L) {
  const auto& apex_faces = p.vertex_faces(apex);
  ApexFaceBound out;
  for (FaceId f = 0; f < p.face_count(); ++f) {
    if (p.face_contains(f, apex)) continue;
    const int k = p.degree(f);
    const auto& adj = p.edge_adjacent_faces(f);
    const auto touching = std::count_if(apex_faces.begin(), apex_faces.end(), [&](FaceId g) {
      return std::binary_search(adj.begin(), adj.end(), g);
    });
    if (touching >= 2) out.degenerate_projection = true;
    if (touching > 0) {
      out.value += static_cast<double>(k - 1) * L(2 * k - 2);
    } else {
      out.value += static_cast<double>(k) * L(k);
    }
  }
  return out;
}

bool better(const ErrBoundedValue& candidate, const ErrBoundedValue& incumbent) {
  const double scale = std::max(1.0, std::abs(incumbent.value));
  return candidate.value < incumbent.value - kTieTolerance * scale;
}

}  // namespace

const BoundInfo& bound_info(BoundId id) { return kBounds.at(static_cast<std::size_t>(id)); }

const std::vector<BoundInfo>& all_bounds() { return kBounds; }

TwoSided ideal_atkinson(long V) {
  if (V < 6) throw std::domain_error("no ideal right-angled polyhedron has V < 6");
  return {(0.25 * static_cast<double>(V)) * v8() - 0.5 * v8(), half_v8_times(V) - 2.0 * v8()};
}

ErrBoundedValue ideal_upper_v9(long V) {
  if (V < 9) throw std::domain_error("bound requires V >= 9");
  return half_v8_times(V) - 2.5 * v8();
}

std::vector<BoundEntry> ideal_upper_refined(long V, int max_face_k, bool only_tri_quad_faces) {
  std::vector<BoundEntry> out;
  if (V > 24) {
    out.push_back(applicable(BoundId::IdealUpperLarge, half_v8_times(V) - 3.0 * v8()));
  } else {
    out.push_back(inapplicable(BoundId::IdealUpperLarge, "requires V > 24"));
  }
  if (max_face_k >= 3) {
    out.push_back(applicable(BoundId::IdealUpperKGon,
                             half_v8_times(V) - ((max_face_k + 5) / 4.0) * v8(), max_face_k));
  } else {
    out.push_back(inapplicable(BoundId::IdealUpperKGon, "requires a k-gonal face, k >= 3", max_face_k));
  }
  if (only_tri_quad_faces && V >= 73) {
    out.push_back(applicable(BoundId::IdealUpperTriQuad, half_v8_times(V) - (9.0 * v8() - 20.0 * v3())));
  } else if (!only_tri_quad_faces) {
    out.push_back(inapplicable(BoundId::IdealUpperTriQuad, "has a k-gonal face with k >= 5"));
  } else {
    out.push_back(inapplicable(BoundId::IdealUpperTriQuad, "requires V >= 73"));
  }
  return out;
}

ErrBoundedValue apex_vertex_bound(const CombinatorialPolytope& p, VertexId apex) {
  require_ideal(p);
  const int m = quasi_adjacent_count(p, apex);
  const double factor = static_cast<double>(p.vertex_count()) - 4.0 - m / 2.0;
  return factor * (0.5 * v8());
}

ApexFaceBound apex_face_bound(const CombinatorialPolytope& p, VertexId apex) {
  require_ideal(p);
  if (!p.has_vertex(apex)) throw std::out_of_range("unknown vertex id " + std::to_string(apex));
  LobachevskyAtPiOver L;
  return apex_face_bound_impl(p, apex, L);
}

const char* to_string(ApexMethod m) { return m == ApexMethod::Vertex ? "vertex" : "face"; }

ApexBound best_apex_bound(const CombinatorialPolytope& p, ApexMethod method) {
  require_ideal(p);
  LobachevskyAtPiOver L;
  std::optional<ApexBound> best;
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    ApexBound candidate{v, method, {}, false};
    if (method == ApexMethod::Vertex) {
      const int m = quasi_adjacent_count(p, v);
      candidate.value = (static_cast<double>(p.vertex_count()) - 4.0 - m / 2.0) * (0.5 * v8());
    } else {
      const auto fb = apex_face_bound_impl(p, v, L);
      candidate.value = fb.value;
      candidate.degenerate_projection = fb.degenerate_projection;
    }
    if (!best || better(candidate.value, best->value)) best = candidate;
  }
  return *best;
}

ApexBound best_apex_bound(const CombinatorialPolytope& p) {
  const auto by_vertex = best_apex_bound(p, ApexMethod::Vertex);
  const auto by_face = best_apex_bound(p, ApexMethod::Face);
  if (better(by_face.value, by_vertex.value)) return by_face;
  if (better(by_vertex.value, by_face.value)) return by_vertex;
  return by_face.apex < by_vertex.apex ? by_face : by_vertex;
}

std::vector<BoundEntry> compact_bounds(long V, int max_face_k) {
  if (!(V == 20 || V >= 24)) {
    throw std::domain_error("compact right-angled polytopes have V = 20 or V >= 24, got " + std::to_string(V));
  }
  const auto lead = five_eighths_v3_times(V);
  std::vector<BoundEntry> out;
  out.push_back(applicable(BoundId::CompactLowerAtkinson,
                           (static_cast<double>(V) / 32.0) * v8() - 0.25 * v8()));
  out.push_back(applicable(BoundId::CompactUpperAtkinson, lead - 6.25 * v3()));
  if (V >= 24) {
    out.push_back(applicable(BoundId::CompactUpperV24, lead - 8.75 * v3()));
  } else {
    out.push_back(inapplicable(BoundId::CompactUpperV24, "requires V >= 24"));
  }
  if (V > 80) {
    out.push_back(applicable(BoundId::CompactUpperLarge, lead - 10.0 * v3()));
  } else {
    out.push_back(inapplicable(BoundId::CompactUpperLarge, "requires V > 80"));
  }
  if (max_face_k >= 5) {
    out.push_back(applicable(BoundId::CompactUpperKGon, lead - ((5.0 * max_face_k + 35.0) / 8.0) * v3(),
                             max_face_k));
  } else {
    out.push_back(inapplicable(BoundId::CompactUpperKGon, "requires a k-gonal face, k >= 5", max_face_k));
  }
  return out;
}

ErrBoundedValue face_triple_bound(long V, int k1, int k2, int k3) {
  if (V < 20) throw std::domain_error("face triple bound requires V >= 20");
  if (k1 < 5 || k2 < 5 || k3 < 5) throw std::domain_error("face triple bound requires k_i >= 5");
  return static_cast<double>(V - k1 - k2 - k3 + 4) * (0.625 * v3());
}

std::optional<FaceTriple> best_face_triple(const CombinatorialPolytope& p) {
  p.require_valid();
  std::optional<FaceTriple> best;
  auto consider = [&](FaceTriple t) {
    if (!best || t.k_sum > best->k_sum ||
        (t.k_sum == best->k_sum &&
         std::tie(t.f1, t.f2, t.f3) < std::tie(best->f1, best->f2, best->f3))) {
      best = t;
    }
  };
  for (FaceId f2 = 0; f2 < p.face_count(); ++f2) {
    const auto& adj = p.edge_adjacent_faces(f2);
    for (FaceId f1 : adj)
      for (FaceId f3 : adj)
        if (f1 != f3) consider({f1, f2, f3, p.degree(f1) + p.degree(f2) + p.degree(f3)});
  }
  return best;
}

std::vector<BoundEntry> mixed_bounds(long V_inf, long V_F) {
  if (V_inf < 0 || V_F < 0 || V_inf + V_F == 0) {
    throw std::domain_error("mixed bounds need non-negative vertex counts, not both zero");
  }
  const auto vi = static_cast<double>(V_inf);
  const auto vf = static_cast<double>(V_F);
  const auto upper = (0.5 * vi) * v8() + (0.625 * vf) * v3() - 0.5 * v8();
  std::vector<BoundEntry> out;
  out.push_back(applicable(BoundId::MixedLowerAtkinson,
                           (vi / 8.0) * v8() + (vf / 32.0) * v8() - 0.25 * v8()));
  out.push_back(applicable(BoundId::MixedUpperAtkinson, upper));
  if (V_inf + V_F > 15) {
    out.push_back(applicable(BoundId::MixedUpperImproved,
                             (0.5 * vi) * v8() + (0.625 * vf) * v3() - (v8() + 2.5 * v3())));
  } else {
    out.push_back(inapplicable(BoundId::MixedUpperImproved, "requires V_inf + V_F > 15"));
  }
  return out;
}

ErrBoundedValue chain_term(int i, int k_ideal, int k_finite) {
  if (i < 1) throw std::domain_error("chain stages are numbered from 1");
  return (k_ideal / std::ldexp(1.0, i + 1)) * v8() + (5.0 * k_finite / std::ldexp(1.0, i + 2)) * v3();
}

ErrBoundedValue chain_upper_bound(long V_inf, long V_F, const std::vector<DoublingStage>& stages) {
  auto value = (0.5 * static_cast<double>(V_inf)) * v8() + (0.625 * static_cast<double>(V_F)) * v3();
  int i = 0;
  for (const auto& stage : stages) value -= chain_term(++i, stage.k_ideal, stage.k_finite);
  return value - (1.0 / std::ldexp(1.0, i + 1)) * v8();
}

BoundReport bound_report(const CombinatorialPolytope& p) { return bound_report(p, classify(p)); }

BoundReport bound_report(const CombinatorialPolytope& p, const RealizabilityClass& cls) {
  if (!cls.realizable()) throw std::invalid_argument("bound report requires a realizable polytope");
  const auto prof = profile(p);
  BoundReport report;
  report.realizability = cls.kind;

  std::vector<BoundEntry> found;
  const char* family_reason = nullptr;
  if (cls.kind == Realizability::IdealRA) {
    const long V = prof.vertices;
    const auto atk = ideal_atkinson(V);
    found.push_back(applicable(BoundId::IdealLowerAtkinson, atk.lower));
    found.push_back(applicable(BoundId::IdealUpperAtkinson, atk.upper));
    if (V >= 9) {
      found.push_back(applicable(BoundId::IdealUpperV9, ideal_upper_v9(V)));
    } else {
      found.push_back(inapplicable(BoundId::IdealUpperV9, "requires V >= 9"));
    }
    for (auto& e : ideal_upper_refined(V, prof.max_face_degree(), prof.max_face_degree() <= 4)) {
      found.push_back(std::move(e));
    }
    const auto by_vertex = best_apex_bound(p, ApexMethod::Vertex);
    const auto by_face = best_apex_bound(p, ApexMethod::Face);
    found.push_back(applicable(BoundId::IdealApexVertex, by_vertex.value));
    auto face_entry = applicable(BoundId::IdealApexFace, by_face.value);
    if (by_face.degenerate_projection) face_entry.reason = "degenerate-projection unverified";
    found.push_back(std::move(face_entry));
    report.apex = better(by_face.value, by_vertex.value) ? by_face : by_vertex;
  } else if (cls.kind == Realizability::CompactRA) {
    const long V = prof.vertices;
    if (V == 20 || V >= 24) {
      for (auto& e : compact_bounds(V, prof.max_face_degree())) found.push_back(std::move(e));
    }
    report.triple = best_face_triple(p);
    if (report.triple && V >= 20) {
      const auto& t = *report.triple;
      found.push_back(applicable(BoundId::CompactUpperFaceTriple,
                                 face_triple_bound(V, p.degree(t.f1), p.degree(t.f2), p.degree(t.f3)),
                                 t.k_sum));
    }
  } else {
    for (auto& e : mixed_bounds(prof.ideal_vertices, prof.finite_vertices)) found.push_back(std::move(e));
  }
  switch (cls.kind) {
    case Realizability::IdealRA: family_reason = "polytope is ideal"; break;
    case Realizability::CompactRA: family_reason = "polytope is compact"; break;
    default: family_reason = "polytope has ideal and finite vertices"; break;
  }

  for (const auto& info : kBounds) {
    auto it = std::find_if(found.begin(), found.end(), [&](const BoundEntry& e) { return e.id == info.id; });
    if (it != found.end()) {
      report.entries.push_back(*it);
    } else {
      report.entries.push_back(inapplicable(info.id, std::string("not applicable: ") + family_reason));
    }
  }

  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    if (!e.applicable) continue;
    if (bound_info(e.id).upper) {
      if (!report.best_upper || better(*e.value, *report.entries[*report.best_upper].value)) {
        report.best_upper = i;
      }
    } else if (!report.best_lower || better(-*e.value, -*report.entries[*report.best_lower].value)) {
      report.best_lower = i;
    }
  }
  return report;
}

}  // namespace rahp
