#pragma once

// Independent reference implementations used to derive expected values.
// Everything here works on raw face lists, straight from the definitions,
// and shares no code with the library.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

using Faces = std::vector<std::vector<int>>;
using Pair = std::pair<int, int>;

inline Pair ordered(int a, int b) { return a < b ? Pair{a, b} : Pair{b, a}; }

inline int vertex_count(const Faces& faces) {
  int m = -1;
  for (const auto& f : faces)
    for (int v : f) m = std::max(m, v);
  return m + 1;
}

inline std::set<Pair> edges(const Faces& faces) {
  std::set<Pair> out;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i) out.insert(ordered(f[i], f[(i + 1) % f.size()]));
  return out;
}

inline bool on_face(const std::vector<int>& f, int v) { return std::find(f.begin(), f.end(), v) != f.end(); }

inline int valence(const Faces& faces, int v) {
  int n = 0;
  for (const auto& f : faces) n += on_face(f, v);
  return n;
}

// Vertices on a common face with v, minus v and its edge-neighbours.
inline int quasi_adjacent(const Faces& faces, int v) {
  const auto es = edges(faces);
  std::set<int> out;
  for (const auto& f : faces) {
    if (!on_face(f, v)) continue;
    for (int w : f)
      if (w != v && !es.count(ordered(v, w))) out.insert(w);
  }
  return static_cast<int>(out.size());
}

// Vertices not on e that share a face with one of its endpoints.
inline int quasi_incident(const Faces& faces, Pair e) {
  std::set<int> out;
  for (const auto& f : faces) {
    if (!on_face(f, e.first) && !on_face(f, e.second)) continue;
    for (int w : f)
      if (w != e.first && w != e.second) out.insert(w);
  }
  return static_cast<int>(out.size());
}

// Faces other than f sharing a vertex with it.
inline int face_neighbours(const Faces& faces, std::size_t f) {
  int n = 0;
  for (std::size_t g = 0; g < faces.size(); ++g) {
    if (g == f) continue;
    bool meet = false;
    for (int v : faces[g]) meet = meet || on_face(faces[f], v);
    n += meet;
  }
  return n;
}

// -integral_0^x log|2 sin t| dt by tanh-sinh quadrature, for 0 <= x <= pi.
inline double lobachevsky(double x) {
  if (x == 0.0) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [](double t, double tc) {
    // tc is the distance to the nearer endpoint, which keeps sin accurate there
    (void)tc;
    return -std::log(std::abs(2.0 * std::sin(t)));
  };
  return integrator.integrate(f, 0.0, x);
}

// Icosahedron: apex 0, upper ring 1..5, lower ring 6..10, apex 11.
inline Faces icosahedron() {
  Faces out;
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i, un = 1 + (i + 1) % 5, l = 6 + i, ln = 6 + (i + 1) % 5;
    out.push_back({0, u, un});
    out.push_back({u, l, un});
    out.push_back({l, ln, un});
    out.push_back({11, ln, l});
  }
  return out;
}

// Truncates every vertex: each k-gon becomes a 2k-gon and each vertex of
// valence d becomes a d-gon.
inline Faces truncate(const Faces& faces) {
  std::map<Pair, int> id;  // (v, w): new vertex on edge vw next to v
  auto node = [&](int v, int w) {
    auto [it, fresh] = id.emplace(Pair{v, w}, static_cast<int>(id.size()));
    return it->second;
  };
  Faces out;
  for (const auto& f : faces) {
    std::vector<int> g;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i], b = f[(i + 1) % f.size()];
      g.push_back(node(a, b));
      g.push_back(node(b, a));
    }
    out.push_back(g);
  }
  const int V = vertex_count(faces);
  for (int v = 0; v < V; ++v) {
    // walk the neighbours of v: in a face reading (p, v, s), s follows p
    std::map<int, int> next;
    for (const auto& f : faces) {
      const auto k = f.size();
      for (std::size_t i = 0; i < k; ++i) {
        if (f[i] == v) next[f[(i + k - 1) % k]] = f[(i + 1) % k];
      }
    }
    std::vector<int> g;
    int w = next.begin()->first;
    do {
      g.push_back(node(v, w));
      w = next[w];
    } while (w != next.begin()->first);
    out.push_back(g);
  }
  return out;
}

}  // namespace oracle
