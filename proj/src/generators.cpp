#include "rahp/generators.hpp"

#include <stdexcept>

namespace rahp {

CombinatorialPolytope antiprism(int n) {
  if (n < 3) throw std::domain_error("antiprism needs n >= 3, got " + std::to_string(n));
  // Top ring t_i = i, bottom ring b_i = n + i; b_i sits between t_i and t_{i+1}.
  auto t = [n](int i) { return i % n; };
  auto b = [n](int i) { return n + i % n; };
  std::vector<Face> faces;
  Face top;
  Face bottom;
  for (int i = 0; i < n; ++i) {
    top.push_back(t(i));
    bottom.push_back(b(n - 1 - i));
  }
  faces.push_back(top);
  faces.push_back(bottom);
  for (int i = 0; i < n; ++i) {
    faces.push_back({t(i), b(i), t(i + 1)});
    faces.push_back({b(i), b(i + 1), t(i + 1)});
  }
  return {"A(" + std::to_string(n) + ")", std::move(faces)};
}

CombinatorialPolytope loebell(int n) {
  if (n < 5) throw std::domain_error("Loebell polytope needs n >= 5, got " + std::to_string(n));
  // Top base a_i, its spokes b_i, the matching spokes c_i of the bottom base d_i.
  // The middle zigzag runs b_0 c_0 b_1 c_1 ... b_{n-1} c_{n-1}.
  auto a = [n](int i) { return i % n; };
  auto b = [n](int i) { return n + i % n; };
  auto c = [n](int i) { return 2 * n + i % n; };
  auto d = [n](int i) { return 3 * n + i % n; };
  std::vector<Face> faces;
  Face top;
  Face bottom;
  for (int i = 0; i < n; ++i) {
    top.push_back(a(i));
    bottom.push_back(d(n - 1 - i));
  }
  faces.push_back(top);
  faces.push_back(bottom);
  for (int i = 0; i < n; ++i) {
    faces.push_back({a(i), b(i), c(i), b(i + 1), a(i + 1)});
    faces.push_back({d(i + 1), c(i + 1), b(i + 1), c(i), d(i)});
  }
  return {"L(" + std::to_string(n) + ")", std::move(faces)};
}

CombinatorialPolytope prism(int n) {
  if (n < 3) throw std::domain_error("prism needs n >= 3, got " + std::to_string(n));
  std::vector<Face> faces;
  Face top;
  Face bottom;
  for (int i = 0; i < n; ++i) {
    top.push_back(i);
    bottom.push_back(2 * n - 1 - i);
  }
  faces.push_back(top);
  faces.push_back(bottom);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    faces.push_back({j, i, n + i, n + j});
  }
  return {n == 4 ? "cube" : "prism(" + std::to_string(n) + ")", std::move(faces)};
}

CombinatorialPolytope tetrahedron() {
  return {"tetrahedron", {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}};
}

DoublingChain octahedron_chain(int depth) {
  if (depth < 0) throw std::domain_error("chain depth must be >= 0");
  auto chain = double_chain(antiprism(3), depth, FaceSelection{FaceSelector::AllTriangleNeighbours, {}});
  for (std::size_t i = 0; i < chain.polytopes.size(); ++i) {
    auto& entry = chain.polytopes[i];
    entry = CombinatorialPolytope("octa-chain(" + std::to_string(i) + ")", entry.faces());
  }
  return chain;
}

Family family_from_string(const std::string& s) {
  if (s == "antiprism") return Family::Antiprism;
  if (s == "loebell") return Family::Loebell;
  if (s == "octa-double-chain") return Family::OctaDoubleChain;
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::vector<CombinatorialPolytope> generate(Family family, int n_or_depth) {
  switch (family) {
    case Family::Antiprism: return {antiprism(n_or_depth)};
    case Family::Loebell: return {loebell(n_or_depth)};
    case Family::OctaDoubleChain: return octahedron_chain(n_or_depth).polytopes;
  }
  throw std::logic_error("unreachable");
}

}  // namespace rahp
