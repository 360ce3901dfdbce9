#include "rahp/harness.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rahp/bounds.hpp"
#include "rahp/closed_volumes.hpp"
#include "rahp/generators.hpp"

namespace rahp {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "FAILS";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

std::string ClaimResult::line() const {
  std::string out = claim + " " + entry + " " + to_string(verdict);
  if (!witness.empty()) out += " witness=" + witness;
  if (!detail.empty()) out += " (" + detail + ")";
  return out;
}

Suite suite_from_string(const std::string& s) {
  if (s == "ideal") return Suite::Ideal;
  if (s == "compact") return Suite::Compact;
  if (s == "mixed") return Suite::Mixed;
  if (s == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + s + "'");
}

namespace {

std::string str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

std::string str(Edge e) { return "(" + std::to_string(e.a) + "-" + std::to_string(e.b) + ")"; }

ClaimResult start(const char* claim, const CombinatorialPolytope& p) {
  ClaimResult r;
  r.claim = claim;
  r.entry = p.name();
  return r;
}

ClaimResult not_applicable(ClaimResult r, std::string why) {
  r.verdict = Verdict::NotApplicable;
  r.detail = std::move(why);
  return r;
}

ClaimResult fail(ClaimResult r, std::string why) {
  r.verdict = Verdict::Fails;
  r.detail = std::move(why);
  return r;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

CatalogEntry make_entry(CombinatorialPolytope p, std::string population,
                        std::optional<ErrBoundedValue> vol = std::nullopt) {
  return CatalogEntry{std::move(p), std::move(population), vol};
}

CatalogEntry doubled(const CatalogEntry& src, FaceId f, const std::string& population) {
  std::optional<ErrBoundedValue> vol;
  if (src.known_volume) vol = 2.0 * *src.known_volume;
  return make_entry(double_along_face(src.polytope, f), population, vol);
}

}  // namespace

std::vector<CatalogEntry> ideal_catalog() {
  std::vector<CatalogEntry> out;
  std::vector<CatalogEntry> doubles;
  for (int n = 3; n <= 50; ++n) {
    auto e = make_entry(antiprism(n), "antiprism", vol_antiprism(n));
    doubles.push_back(doubled(e, 0, "antiprism double (base)"));
    doubles.push_back(doubled(e, 2, "antiprism double (triangle)"));
    out.push_back(std::move(e));
  }
  const auto chain = octahedron_chain(5);
  ErrBoundedValue vol = v8();
  for (std::size_t i = 0; i < chain.polytopes.size(); ++i) {
    if (i > 0) out.push_back(make_entry(chain.polytopes[i], "octahedron chain", vol));
    vol = 2.0 * vol;
  }
  for (auto& d : doubles) out.push_back(std::move(d));
  return out;
}

std::vector<CatalogEntry> compact_catalog() {
  std::vector<CatalogEntry> out;
  std::vector<CatalogEntry> doubles;
  for (int n = 5; n <= 50; ++n) {
    auto e = make_entry(loebell(n), "loebell", vol_loebell(n));
    doubles.push_back(doubled(e, 0, "loebell double (base)"));
    doubles.push_back(doubled(e, 2, "loebell double (pentagon)"));
    out.push_back(std::move(e));
  }
  for (auto& d : doubles) out.push_back(std::move(d));
  return out;
}

CombinatorialPolytope contract_edges(const CombinatorialPolytope& p, const std::vector<Edge>& edges,
                                     std::string name) {
  std::vector<VertexId> parent(p.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : edges) {
    if (!p.edge_index(e)) throw std::invalid_argument("contract_edges: " + str(e) + " is not an edge");
    const VertexId a = find(e.a), b = find(e.b);
    parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Face> faces;
  for (const Face& face : p.faces()) {
    Face merged;
    for (VertexId v : face) {
      const VertexId r = find(v);
      if (merged.empty() || merged.back() != r) merged.push_back(r);
    }
    while (merged.size() > 1 && merged.front() == merged.back()) merged.pop_back();
    faces.push_back(std::move(merged));
  }
  std::vector<VertexId> renumber(p.vertex_count(), -1);
  int next = 0;
  for (VertexId v = 0; v < p.vertex_count(); ++v)
    if (find(v) == v) renumber[v] = next++;
  for (Face& face : faces)
    for (VertexId& v : face) v = renumber[v];
  return {std::move(name), std::move(faces)};
}

namespace {

// Loebell polytopes with some vertical a_i-b_i edges (and optionally c_i-d_i
// edges) collapsed into ideal vertices.
std::vector<CombinatorialPolytope> contraction_fixtures() {
  std::vector<CombinatorialPolytope> out;
  for (int n = 5; n <= 12; ++n) {
    auto L = loebell(n);
    auto ab = [n](int i) { return Edge(i % n, n + i % n); };
    auto cd = [n](int i) { return Edge(2 * n + i % n, 3 * n + i % n); };
    const std::string tag = "L" + std::to_string(n);
    out.push_back(contract_edges(L, {ab(0)}, tag + "/ab1"));
    out.push_back(contract_edges(L, {ab(0), cd(0)}, tag + "/ab1cd1"));
    {
      std::vector<Edge> alt;
      for (int i = 0; i + 1 < n; i += 2) alt.push_back(ab(i));
      out.push_back(contract_edges(L, alt, tag + "/ab-alt"));
      std::vector<Edge> alt2 = alt;
      for (int i = 1; i + 1 < n; i += 2) alt2.push_back(cd(i));
      out.push_back(contract_edges(L, alt2, tag + "/ab-alt-cd-alt"));
    }
    {
      std::vector<Edge> three{ab(0), ab(2), ab(4)};
      out.push_back(contract_edges(L, three, tag + "/ab3"));
    }
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> mixed_catalog() {
  std::vector<CatalogEntry> out;
  std::vector<CatalogEntry> doubles;
  for (auto& p : contraction_fixtures()) {
    if (!p.valid() || classify(p).kind != Realizability::MixedRA) continue;
    auto e = make_entry(std::move(p), "contracted loebell");
    for (FaceId f : {0, 2}) {
      auto d = double_along_face(e.polytope, f);
      if (classify(d).kind == Realizability::MixedRA) doubles.push_back(make_entry(std::move(d), "mixed double"));
    }
    out.push_back(std::move(e));
  }
  for (auto& d : doubles) out.push_back(std::move(d));
  return out;
}

std::vector<CatalogEntry> catalog(Suite suite) {
  switch (suite) {
    case Suite::Ideal: return ideal_catalog();
    case Suite::Compact: return compact_catalog();
    case Suite::Mixed: return mixed_catalog();
    case Suite::All: {
      auto out = ideal_catalog();
      for (auto* part : {compact_catalog, mixed_catalog}) {
        auto more = part();
        std::move(more.begin(), more.end(), std::back_inserter(out));
      }
      return out;
    }
  }
  return {};
}

std::vector<CatalogEntry> user_entries(const std::vector<CombinatorialPolytope>& extra) {
  std::vector<CatalogEntry> out;
  for (const auto& p : extra) {
    if (p.valid() && classify(p).realizable()) out.push_back(make_entry(p, "user"));
  }
  return out;
}

ClaimResult verify_quasi_adjacent_vertex(const CombinatorialPolytope& p, const RealizabilityClass& cls) {
  auto r = start("vertex-4-quasi-adjacent", p);
  if (cls.kind != Realizability::IdealRA) return not_applicable(r, "not ideal");
  const int V = p.vertex_count();
  if (V <= 24) return not_applicable(r, "V <= 24");
  const Rational direct = avg_quasi_adjacent(p);
  const Rational closed = avg_quasi_adjacent_closed_form(profile(p));
  if (direct != closed) return fail(r, "average " + str(direct) + " != closed form " + str(closed));
  if (direct < Rational(4) - Rational(24, V)) return fail(r, "average " + str(direct) + " below 4 - 24/V");
  for (VertexId v = 0; v < V; ++v) {
    const int q = quasi_adjacent_count(p, v);
    if (q >= 4) {
      r.verdict = Verdict::Holds;
      r.witness = "v" + std::to_string(v) + ":" + std::to_string(q);
      r.detail = "average " + str(direct);
      return r;
    }
  }
  return fail(r, "no vertex with 4 quasi-adjacent vertices");
}

ClaimResult verify_triangle_free_vertex(const CombinatorialPolytope& p, const RealizabilityClass& cls) {
  auto r = start("triangle-free-vertex", p);
  if (cls.kind != Realizability::IdealRA) return not_applicable(r, "not ideal");
  if (p.vertex_count() <= 72) return not_applicable(r, "V <= 72");
  if (profile(p).max_face_degree() > 4) return not_applicable(r, "has a face with k >= 5");
  for (FaceId f = 0; f < p.face_count(); ++f) {
    if (p.degree(f) != 3) continue;
    const auto touched = incident_or_quasi_incident_vertices(p, f).size();
    if (touched > 9) return fail(r, "triangle f" + std::to_string(f) + " touches " + std::to_string(touched));
  }
  const auto v = triangle_free_vertex(p);
  if (!v) return fail(r, "every vertex meets a triangle");
  r.verdict = Verdict::Holds;
  r.witness = "v" + std::to_string(*v);
  return r;
}

ClaimResult verify_fat_edge(const CombinatorialPolytope& p, const RealizabilityClass& cls) {
  auto r = start("edge-14-quasi-incident", p);
  if (cls.kind != Realizability::CompactRA) return not_applicable(r, "not compact");
  const Rational direct = avg_quasi_incident(p);
  const Rational closed = avg_quasi_incident_closed_form(profile(p));
  if (direct != closed) return fail(r, "average " + str(direct) + " != closed form " + str(closed));
  if (p.vertex_count() <= 80) return not_applicable(r, "V <= 80; average " + str(direct));
  for (const Edge& e : p.edges()) {
    const int sum = edge_face_degree_sum(p, e);
    if (sum < 24) continue;
    const int q = quasi_incident_vertices(p, e);
    if (q < 14) return fail(r, "edge " + str(e) + " has degree sum " + std::to_string(sum) + " but " +
                                   std::to_string(q) + " quasi-incident vertices");
    r.verdict = Verdict::Holds;
    r.witness = str(e) + ":" + std::to_string(q) + " sum=" + std::to_string(sum);
    r.detail = "average " + str(direct);
    return r;
  }
  return fail(r, "no edge with face-degree sum >= 24");
}

ClaimResult verify_face_neighbours(const CombinatorialPolytope& p, const RealizabilityClass& cls, int part) {
  static const char* names[] = {"face-6-neighbours", "five-faces-6-neighbours", "face-7-neighbours"};
  if (part < 1 || part > 3) throw std::invalid_argument("face-neighbour claim part must be 1, 2 or 3");
  auto r = start(names[part - 1], p);
  if (!cls.realizable()) return not_applicable(r, "not realizable");
  const auto prof = profile(p);
  const long vi = prof.ideal_vertices;
  const long vf = prof.finite_vertices;
  std::vector<int> count(p.face_count());
  for (FaceId f = 0; f < p.face_count(); ++f) count[f] = face_neighbours(p, f);
  auto first_with = [&](int at_least) -> std::optional<FaceId> {
    for (FaceId f = 0; f < p.face_count(); ++f)
      if (count[f] >= at_least) return f;
    return std::nullopt;
  };
  auto label = [&](FaceId f) { return "f" + std::to_string(f) + ":" + std::to_string(count[f]); };

  if (part == 1) {
    if (vf + vi <= 15 || vi < 1) return not_applicable(r, "needs V > 15 and V_inf >= 1");
    const auto f = first_with(6);
    if (!f) return fail(r, "no face with 6 neighbours");
    r.verdict = Verdict::Holds;
    r.witness = label(*f);
    return r;
  }
  if (part == 2) {
    if (vf + vi <= 14 || vi < 3) return not_applicable(r, "needs V > 14 and V_inf >= 3");
    if (const auto f = first_with(7)) {
      r.verdict = Verdict::Holds;
      r.witness = label(*f);
      r.detail = "a face has 7 neighbours";
      return r;
    }
    std::vector<int> six;
    for (FaceId f = 0; f < p.face_count() && six.size() < 5; ++f)
      if (count[f] >= 6) six.push_back(f);
    if (six.size() < 5) return fail(r, "only " + std::to_string(six.size()) + " faces with 6 neighbours");
    r.verdict = Verdict::Holds;
    r.witness = "f" + join(six);
    return r;
  }
  if (vi < 6) return not_applicable(r, "needs V_inf >= 6");
  FaceId small = -1;
  for (FaceId f = 0; f < p.face_count() && small < 0; ++f)
    if (count[f] <= 5) small = f;
  if (small < 0) return not_applicable(r, "no face with <= 5 neighbours");
  const auto f = first_with(7);
  if (!f) return fail(r, "f" + std::to_string(small) + " has <= 5 neighbours and none has 7");
  r.verdict = Verdict::Holds;
  r.witness = label(*f);
  r.detail = "given " + label(small);
  return r;
}

ClaimResult verify_n6_non_ideal_triangle(const CombinatorialPolytope& p, const RealizabilityClass& cls) {
  auto r = start("n6-non-ideal-triangle", p);
  if (cls.kind != Realizability::MixedRA) return not_applicable(r, "not mixed");
  if (p.vertex_count() <= 14) return not_applicable(r, "V <= 14");
  for (FaceId f : n6_faces(p)) {
    if (is_ideal_triangle(p, f)) continue;
    r.verdict = Verdict::Holds;
    r.witness = "f" + std::to_string(f) + ":" + std::to_string(face_neighbours(p, f));
    return r;
  }
  return fail(r, "every face with 6 neighbours is an ideal triangle");
}

std::vector<ClaimResult> verify_chain_n6(const DoublingChain& chain) {
  std::vector<ClaimResult> out;
  for (std::size_t i = 0; i < chain.polytopes.size(); ++i) {
    const auto& p = chain.polytopes[i];
    auto r = verify_n6_non_ideal_triangle(p, classify(p));
    r.claim = "chain-n6-non-ideal-triangle";
    r.entry = chain.polytopes.front().name() + "#" + std::to_string(i);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ClaimResult> verify_identities(const CombinatorialPolytope& p, const RealizabilityClass& cls) {
  std::vector<ClaimResult> out;
  const auto prof = profile(p);

  auto euler = start("euler-identities", p);
  std::int64_t deg_sum = 0;
  for (const auto& [k, pk] : prof.face_degrees) deg_sum += k * pk;
  std::int64_t valence_sum = std::accumulate(prof.valence.begin(), prof.valence.end(), std::int64_t{0});
  if (prof.vertices - prof.edges + prof.faces != 2) {
    euler = fail(euler, "V - E + F != 2");
  } else if (deg_sum != 2 * prof.edges || valence_sum != 2 * prof.edges) {
    euler = fail(euler, "face degrees or valences do not sum to 2E");
  } else if (cls.kind == Realizability::IdealRA) {
    std::int64_t rhs = 8;
    for (const auto& [k, pk] : prof.face_degrees)
      if (k >= 5) rhs += (k - 4) * pk;
    euler = prof.p(3) == rhs ? euler : fail(euler, "p3 != 8 + sum (k-4) p_k");
    if (euler.verdict != Verdict::Fails) euler.verdict = Verdict::Holds;
  } else if (cls.kind == Realizability::CompactRA) {
    std::int64_t rhs = 12;
    for (const auto& [k, pk] : prof.face_degrees)
      if (k >= 7) rhs += (k - 6) * pk;
    euler = prof.p(5) == rhs ? euler : fail(euler, "p5 != 12 + sum (k-6) p_k");
    if (euler.verdict != Verdict::Fails) euler.verdict = Verdict::Holds;
  } else {
    euler.verdict = Verdict::Holds;
  }
  if (euler.verdict == Verdict::Holds) {
    euler.detail = "V=" + std::to_string(prof.vertices) + " E=" + std::to_string(prof.edges) +
                   " F=" + std::to_string(prof.faces);
  }
  out.push_back(std::move(euler));

  auto qa = start("quasi-adjacent-average", p);
  if (cls.kind != Realizability::IdealRA) {
    qa = not_applicable(qa, "not ideal");
  } else {
    const Rational a = avg_quasi_adjacent(p), b = avg_quasi_adjacent_closed_form(prof);
    qa = a == b ? qa : fail(qa, str(a) + " != " + str(b));
    if (a == b) { qa.verdict = Verdict::Holds; qa.detail = str(a); }
  }
  out.push_back(std::move(qa));

  auto qi = start("quasi-incident-average", p);
  if (cls.kind != Realizability::CompactRA) {
    qi = not_applicable(qi, "not compact");
  } else {
    const Rational a = avg_quasi_incident(p), b = avg_quasi_incident_closed_form(prof);
    qi = a == b ? qi : fail(qi, str(a) + " != " + str(b));
    if (a == b) { qi.verdict = Verdict::Holds; qi.detail = str(a); }
  }
  out.push_back(std::move(qi));

  auto fn = start("face-neighbour-average", p);
  if (!cls.realizable()) {
    fn = not_applicable(fn, "not realizable");
  } else {
    const Rational a = avg_face_neighbours_direct(p), b = avg_face_neighbours(p);
    fn = a == b ? fn : fail(fn, str(a) + " != " + str(b));
    if (a == b) { fn.verdict = Verdict::Holds; fn.detail = str(a); }
  }
  out.push_back(std::move(fn));
  return out;
}

ClaimResult verify_realizability(const CatalogEntry& entry, const RealizabilityClass& cls) {
  const auto& p = entry.polytope;
  auto r = start("realizability", p);
  std::optional<Realizability> expected;
  if (entry.population == "antiprism" || entry.population == "octahedron chain" ||
      entry.population.rfind("antiprism double", 0) == 0) {
    expected = Realizability::IdealRA;
  } else if (entry.population == "loebell" || entry.population.rfind("loebell double", 0) == 0) {
    expected = Realizability::CompactRA;
  } else if (entry.population == "contracted loebell" || entry.population == "mixed double") {
    expected = Realizability::MixedRA;
  }
  if (expected && cls.kind != *expected) {
    return fail(r, std::string("classified ") + to_string(cls.kind) + ", expected " + to_string(*expected));
  }
  if (!cls.realizable()) return not_applicable(r, "not realizable");
  const auto prof = profile(p);
  if (cls.kind == Realizability::CompactRA && (prof.p(3) != 0 || prof.p(4) != 0)) {
    return fail(r, "compact with triangles or quadrilaterals");
  }
  if (prof.faces < 6) return fail(r, "fewer than 6 faces");
  for (FaceId f = 0; f < p.face_count(); ++f) {
    if (face_neighbours(p, f) < 5) return fail(r, "f" + std::to_string(f) + " has fewer than 5 neighbours");
  }
  r.verdict = Verdict::Holds;
  r.witness = to_string(cls.kind);
  return r;
}

ClaimResult verify_doubling_contracts(const CombinatorialPolytope& p, const RealizabilityClass& cls) {
  auto r = start("doubling-contract", p);
  if (!cls.realizable()) return not_applicable(r, "not realizable");
  const auto prof = profile(p);
  for (FaceId f = 0; f < p.face_count(); ++f) {
    const auto kinds = face_vertex_kinds(p, f);
    const std::string at = "f" + std::to_string(f);
    CombinatorialPolytope d;
    try {
      d = double_along_face(p, f);
    } catch (const InvalidPolytope& e) {
      return fail(r, at + ": " + e.what());
    }
    const auto dp = profile(d);
    if (dp.ideal_vertices != 2 * prof.ideal_vertices - kinds.ideal ||
        dp.finite_vertices != 2 * prof.finite_vertices - 2 * kinds.finite || dp.overfull_vertices != 0) {
      return fail(r, at + ": vertex counts " + std::to_string(dp.ideal_vertices) + "/" +
                         std::to_string(dp.finite_vertices));
    }
    if (dp.faces != dp.finite_vertices / 2 + dp.ideal_vertices + 2) return fail(r, at + ": face count");
    const auto dc = classify(d);
    if (!dc.realizable()) return fail(r, at + ": double not realizable, " + dc.witness->describe());
    if ((cls.kind == Realizability::IdealRA || cls.kind == Realizability::CompactRA) && dc.kind != cls.kind) {
      return fail(r, at + ": vertex kinds not preserved");
    }
  }
  r.verdict = Verdict::Holds;
  r.detail = std::to_string(p.face_count()) + " faces";
  return r;
}

ClaimResult verify_bound_soundness(const CatalogEntry& entry, const RealizabilityClass& cls) {
  auto r = start("bound-soundness", entry.polytope);
  if (!entry.known_volume) return not_applicable(r, "no known volume");
  if (!cls.realizable()) return not_applicable(r, "not realizable");
  const auto report = bound_report(entry.polytope, cls);
  const ErrBoundedValue vol = *entry.known_volume;
  std::ostringstream detail;
  detail.precision(9);
  detail << "vol=" << vol.value;
  if (report.best_lower) {
    const auto& e = report.entries[*report.best_lower];
    const ErrBoundedValue lo = *e.value;
    detail << " lower=" << lo.value;
    if (vol.upper() < lo.lower()) return fail(r, detail.str() + " below " + bound_info(e.id).key);
  }
  if (report.best_upper) {
    const auto& e = report.entries[*report.best_upper];
    const ErrBoundedValue hi = *e.value;
    detail << " upper=" << hi.value;
    if (vol.lower() > hi.upper()) return fail(r, detail.str() + " above " + bound_info(e.id).key);
    r.witness = bound_info(e.id).key;
  }
  // every applicable bound, not just the best, must hold
  for (const auto& e : report.entries) {
    if (!e.applicable) continue;
    const bool upper = bound_info(e.id).upper;
    if (upper ? vol.lower() > e.value->upper() : vol.upper() < e.value->lower()) {
      return fail(r, detail.str() + " violates " + bound_info(e.id).key);
    }
  }
  r.verdict = Verdict::Holds;
  r.detail = detail.str();
  return r;
}

std::vector<ClaimResult> verify_bound_soundness(const std::vector<CatalogEntry>& entries) {
  std::vector<ClaimResult> out;
  for (const auto& e : entries) out.push_back(verify_bound_soundness(e, classify(e.polytope)));
  return out;
}

namespace {

std::vector<ClaimResult> verify_entry(const CatalogEntry& entry) {
  const auto& p = entry.polytope;
  std::vector<ClaimResult> out;
  if (!p.valid()) {
    auto r = start("validation", p);
    out.push_back(fail(r, p.validation().summary()));
    return out;
  }
  const auto cls = classify(p);
  out.push_back(verify_realizability(entry, cls));
  if (!cls.realizable()) return out;
  for (auto& r : verify_identities(p, cls)) out.push_back(std::move(r));
  out.push_back(verify_quasi_adjacent_vertex(p, cls));
  out.push_back(verify_triangle_free_vertex(p, cls));
  out.push_back(verify_fat_edge(p, cls));
  for (int part = 1; part <= 3; ++part) out.push_back(verify_face_neighbours(p, cls, part));
  out.push_back(verify_n6_non_ideal_triangle(p, cls));
  out.push_back(verify_doubling_contracts(p, cls));
  out.push_back(verify_bound_soundness(entry, cls));
  if (cls.kind == Realizability::MixedRA) {
    try {
      const auto chain = double_chain(p, 3, FaceSelection{FaceSelector::NonIdealTriangleN6, {}});
      for (auto& r : verify_chain_n6(chain)) out.push_back(std::move(r));
    } catch (const std::exception& e) {
      out.push_back(fail(start("chain-n6-non-ideal-triangle", p), e.what()));
    }
  }
  return out;
}

}  // namespace

std::vector<ClaimResult> run_suite(const std::vector<CatalogEntry>& entries) {
  // entries are independent; results are gathered back in catalog order
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<ClaimResult>> per_entry(entries.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < entries.size(); i += workers) per_entry[i] = verify_entry(entries[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  std::vector<ClaimResult> out;
  for (auto& rs : per_entry)
    for (auto& r : rs) out.push_back(std::move(r));
  return out;
}

SuiteSummary summarize(const std::vector<ClaimResult>& results) {
  SuiteSummary s;
  for (const auto& r : results) {
    switch (r.verdict) {
      case Verdict::Holds: ++s.holds; break;
      case Verdict::Fails: ++s.fails; break;
      case Verdict::NotApplicable: ++s.not_applicable; break;
    }
  }
  return s;
}

}  // namespace rahp
