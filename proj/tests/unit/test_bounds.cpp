#include <doctest.h>

#include "rahp/bounds.hpp"
#include "rahp/closed_volumes.hpp"
#include "rahp/generators.hpp"
#include "rahp/harness.hpp"

using namespace rahp;
using std::numbers::pi;

namespace {

const double V8 = v8().value;
const double V3 = v3().value;

double value_of(const BoundReport& r, BoundId id) {
  const auto& e = r.entry(id);
  REQUIRE(e.applicable);
  return e.value->value;
}

}  // namespace

TEST_CASE("Atkinson ideal bounds are sharp at the octahedron") {
  const auto b = ideal_atkinson(6);
  CHECK(std::abs(b.lower.value - V8) <= 1e-12);
  CHECK(std::abs(b.upper.value - V8) <= 1e-12);
  CHECK_THROWS_AS(ideal_atkinson(5), std::domain_error);
}

TEST_CASE("the V >= 9 bound is sharp at the doubled octahedron") {
  CHECK(std::abs(ideal_upper_v9(9).value - 2 * V8) <= 1e-12);
  CHECK(std::abs(ideal_upper_v9(9).value - 2 * vol_antiprism(3).value) <= 1e-10);
  CHECK_THROWS_AS(ideal_upper_v9(8), std::domain_error);
}

TEST_CASE("refined ideal bounds and their gaps") {
  for (long V = 25; V <= 200; V += 7) {
    const auto a = ideal_atkinson(V);
    const auto refined = ideal_upper_refined(V, 4, true);
    REQUIRE(refined.size() == 3);
    CHECK(std::abs(a.upper.value - ideal_upper_v9(V).value - V8 / 2) <= 1e-9);
    CHECK(std::abs(ideal_upper_v9(V).value - refined[0].value->value - V8 / 2) <= 1e-9);
    CHECK(refined[1].k == 4);
    CHECK(std::abs(refined[1].value->value - (V8 / 2 * V - 2.25 * V8)) <= 1e-9);
    CHECK(refined[2].applicable == (V >= 73));
  }
  const auto small = ideal_upper_refined(20, 6, false);
  CHECK_FALSE(small[0].applicable);
  CHECK(small[1].applicable);
  CHECK_FALSE(small[2].applicable);
}

TEST_CASE("apex decompositions of A(4)") {
  const auto a4 = antiprism(4);
  const auto vertex = best_apex_bound(a4, ApexMethod::Vertex);
  CHECK(std::abs(vertex.value.value - 14 * lobachevsky(Angle{pi / 4}).value) <= 1e-12);
  CHECK(vol_antiprism(4).value <= vertex.value.value);
  CHECK(std::abs(apex_vertex_bound(a4, 0).value - 1.75 * V8) <= 1e-12);

  const auto face = best_apex_bound(a4, ApexMethod::Face);
  CHECK(face.value.value < vertex.value.value);
  CHECK(vol_antiprism(4).value <= face.value.value);
  const auto best = best_apex_bound(a4);
  CHECK(best.method == ApexMethod::Face);
  CHECK(best.value.value == face.value.value);

  CHECK_THROWS_AS(apex_vertex_bound(loebell(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(apex_vertex_bound(a4, 99), std::out_of_range);
}

TEST_CASE("face-cone bound of the octahedron") {
  // apex 0 misses 4 triangles: the opposite one and its three edge-neighbours
  // are all quasi-incident to 0, so each contributes 2 L(pi/4)
  const auto a3 = antiprism(3);
  const auto face = apex_face_bound(a3, 0);
  CHECK(face.value.value >= V8 - 1e-12);
}

TEST_CASE("compact bounds") {
  const auto at20 = compact_bounds(20, 5);
  CHECK(at20[0].applicable);
  CHECK(std::abs(at20[0].value->value - 1.373948) <= 5e-6);
  CHECK(std::abs(at20[1].value->value - 6.343381) <= 5e-6);
  CHECK_FALSE(at20[2].applicable);
  CHECK(at20[4].applicable);
  CHECK(std::abs(at20[4].value->value - 5 * V3) <= 1e-12);
  CHECK_THROWS_AS(compact_bounds(22, 5), std::domain_error);

  for (long V = 84; V <= 200; V += 4) {
    const auto b = compact_bounds(V, 5);
    CHECK(std::abs(b[1].value->value - b[2].value->value - 2.5 * V3) <= 1e-9);
    CHECK(std::abs(b[2].value->value - b[3].value->value - 1.25 * V3) <= 1e-9);
  }
}

TEST_CASE("face triple") {
  const auto l6 = loebell(6);
  const auto t = best_face_triple(l6);
  REQUIRE(t);
  // no pentagon meets both hexagons, so the best is hexagon, pentagon, pentagon
  CHECK(t->k_sum == 16);
  CHECK(l6.shared_edge(t->f1, t->f2).has_value());
  CHECK(l6.shared_edge(t->f2, t->f3).has_value());
  CHECK(face_triple_bound(20, 5, 5, 5).value == doctest::Approx(9 * 0.625 * V3));
  CHECK_THROWS_AS(face_triple_bound(20, 4, 5, 5), std::domain_error);
}

TEST_CASE("mixed bounds and the doubling series") {
  const auto b = mixed_bounds(10, 10);
  REQUIRE(b.size() == 3);
  CHECK(b[2].applicable);
  CHECK(std::abs(b[1].value->value - b[2].value->value - (V8 / 2 + 2.5 * V3)) <= 1e-9);
  CHECK_FALSE(mixed_bounds(5, 10)[2].applicable);
  CHECK_THROWS_AS(mixed_bounds(0, 0), std::domain_error);

  for (int n = 1; n <= 30; ++n) {
    double sum = 0;
    for (int i = 1; i <= n; ++i) sum += chain_term(i, 2, 2).value;
    CHECK(std::abs(sum - (V8 + 2.5 * V3) * (1 - std::ldexp(1.0, -n))) <= 1e-9);
  }
  std::vector<DoublingStage> stages(10, DoublingStage{0, 2, 2});
  const auto chain = chain_upper_bound(20, 20, stages);
  CHECK(chain.value < mixed_bounds(20, 20)[1].value->value);
  CHECK(chain.value > mixed_bounds(20, 20)[2].value->value);
  CHECK_THROWS_AS(chain_term(0, 2, 2), std::domain_error);
}

TEST_CASE("bound reports of the small family members") {
  const auto a4 = bound_report(antiprism(4));
  CHECK(a4.realizability == Realizability::IdealRA);
  CHECK(value_of(a4, BoundId::IdealUpperAtkinson) == doctest::Approx(7.327724).epsilon(1e-6));
  CHECK(value_of(a4, BoundId::IdealUpperKGon) == doctest::Approx(1.75 * V8));
  REQUIRE(a4.best_upper);
  CHECK(a4.entries[*a4.best_upper].id == BoundId::IdealApexFace);
  CHECK_FALSE(a4.entry(BoundId::CompactLowerAtkinson).applicable);
  CHECK_FALSE(a4.entry(BoundId::MixedUpperAtkinson).applicable);

  const auto l5 = bound_report(loebell(5));
  REQUIRE(l5.best_upper);
  CHECK(l5.entries[*l5.best_upper].id == BoundId::CompactUpperKGon);
  CHECK(l5.triple.has_value());
  CHECK_FALSE(l5.apex.has_value());

  CHECK_THROWS_AS(bound_report(prism(4)), std::invalid_argument);
}

TEST_CASE("every applicable bound holds on the closed-form families") {
  for (int n = 3; n <= 50; ++n) {
    const auto r = bound_report(antiprism(n));
    const double vol = vol_antiprism(n).value;
    for (const auto& e : r.entries) {
      if (!e.applicable) continue;
      CAPTURE(n);
      CAPTURE(bound_info(e.id).key);
      if (bound_info(e.id).upper) CHECK(vol <= e.value->value + 1e-9);
      else CHECK(vol >= e.value->value - 1e-9);
    }
    if (n >= 5) CHECK(vol <= (V8 / 2) * (2 * n) - ((n + 5) / 4.0) * V8);
  }
  for (int n = 5; n <= 50; ++n) {
    const auto r = bound_report(loebell(n));
    const double vol = vol_loebell(n).value;
    for (const auto& e : r.entries) {
      if (!e.applicable) continue;
      CAPTURE(n);
      CAPTURE(bound_info(e.id).key);
      if (bound_info(e.id).upper) CHECK(vol <= e.value->value + 1e-9);
      else CHECK(vol >= e.value->value - 1e-9);
    }
  }
}

TEST_CASE("mixed polytopes get mixed bounds only") {
  const auto p = contract_edges(loebell(8), {Edge(0, 8), Edge(2, 10), Edge(4, 12)}, "L8/ab3");
  const auto r = bound_report(p);
  CHECK(r.realizability == Realizability::MixedRA);
  CHECK(r.entry(BoundId::MixedUpperImproved).applicable);
  CHECK_FALSE(r.entry(BoundId::CompactUpperAtkinson).applicable);
  CHECK_FALSE(r.entry(BoundId::IdealUpperAtkinson).applicable);
}
