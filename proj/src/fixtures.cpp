#include "scissors/fixtures.hpp"

#include <algorithm>

#include "scissors/errors.hpp"
#include "scissors/manifold.hpp"

namespace scissors::fixtures {
namespace {

Triangulation from_one_based(int dim, std::size_t vertices, const std::vector<std::vector<int>>& facets) {
  Triangulation t;
  t.dim = dim;
  t.vertices = vertices;
  for (const auto& f : facets) {
    Tuple s;
    for (int v : f) s.push_back(static_cast<std::uint32_t>(v - 1));
    t.facets.push_back(std::move(s));
  }
  return t;
}

/// Closed orientable fixtures carry their orientation; those of dimension >= 5
/// also carry the bordism label 0 (each one bounds).
Triangulation oriented(Triangulation t) {
  t.orientation = compute_orientation(t);
  if (t.dim >= 5) t.bordism = "0";
  return t;
}

}  // namespace

Triangulation sphere(int n) {
  if (n < 1) throw ContractError("sphere: dimension must be at least 1");
  Triangulation t;
  t.dim = n;
  t.vertices = static_cast<std::size_t>(n) + 2;
  for (int omit = n + 1; omit >= 0; --omit) {
    Tuple f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != omit) f.push_back(static_cast<std::uint32_t>(v));
    t.facets.push_back(std::move(f));
  }
  return t;
}

Triangulation two_vertex_circle() {
  Triangulation t;
  t.dim = 1;
  t.vertices = 2;
  t.facets = {{0, 1}, {1, 0}};
  return t;
}

Triangulation torus(int n) {
  if (n < 1) throw ContractError("torus: dimension must be at least 1");
  Triangulation t = two_vertex_circle();
  for (int k = 1; k < n; ++k) t = product(t, two_vertex_circle());
  return t;
}

Triangulation bipartite_circle() {
  Triangulation t;
  t.dim = 1;
  t.vertices = 4;
  t.facets = {{0, 1}, {2, 1}, {2, 3}, {0, 3}};
  return t;
}

Triangulation rp2() {
  return from_one_based(2, 6,
                        {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                         {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

Triangulation cp2() {
  return from_one_based(
      4, 9,
      {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 7}, {1, 2, 3, 5, 8}, {1, 2, 3, 7, 8}, {1, 2, 4, 5, 6}, {1, 2, 4, 6, 7},
       {1, 2, 5, 6, 8}, {1, 2, 6, 7, 9}, {1, 2, 6, 8, 9}, {1, 2, 7, 8, 9}, {1, 3, 4, 5, 9}, {1, 3, 4, 7, 8},
       {1, 3, 4, 8, 9}, {1, 3, 5, 6, 8}, {1, 3, 5, 6, 9}, {1, 3, 6, 8, 9}, {1, 4, 5, 6, 7}, {1, 4, 5, 7, 9},
       {1, 4, 7, 8, 9}, {1, 5, 6, 7, 9}, {2, 3, 4, 5, 9}, {2, 3, 4, 6, 7}, {2, 3, 4, 6, 9}, {2, 3, 5, 7, 8},
       {2, 3, 5, 7, 9}, {2, 3, 6, 7, 9}, {2, 4, 5, 6, 8}, {2, 4, 5, 8, 9}, {2, 4, 6, 8, 9}, {2, 5, 7, 8, 9},
       {3, 4, 6, 7, 8}, {3, 4, 6, 8, 9}, {3, 5, 6, 7, 8}, {3, 5, 6, 7, 9}, {4, 5, 6, 7, 8}, {4, 5, 7, 8, 9}});
}

Triangulation disk(int n) {
  Triangulation t;
  t.dim = n;
  t.vertices = static_cast<std::size_t>(n) + 1;
  Tuple f;
  for (int v = 0; v <= n; ++v) f.push_back(static_cast<std::uint32_t>(v));
  t.facets.push_back(std::move(f));
  return t;
}

VertexMap torus_translation(int n, std::uint32_t mask) {
  VertexMap p(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < p.size(); ++v) p[v] = v ^ mask;
  return p;
}

VertexMap torus_coordinate_permutation(int n, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(n)) throw ContractError("coordinate permutation has the wrong length");
  VertexMap p(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < p.size(); ++v) {
    std::uint32_t w = 0;
    for (int i = 0; i < n; ++i)
      if (v & (1u << i)) w |= 1u << perm[i];
    p[v] = w;
  }
  return p;
}

VertexMap product_map(const VertexMap& a, const VertexMap& b) {
  VertexMap p(a.size() * b.size());
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t w = 0; w < b.size(); ++w)
      p[u * b.size() + w] = static_cast<std::uint32_t>(a[u] * b.size() + b[w]);
  return p;
}

Triangulation fixture(const std::string& name) {
  if (name.size() == 2 && (name[0] == 's' || name[0] == 't') && name[1] >= '1' && name[1] <= '5') {
    const int n = name[1] - '0';
    return oriented(name[0] == 's' ? sphere(n) : torus(n));
  }
  if (name == "rp2") return rp2();
  if (name == "cp2") return oriented(cp2());
  if (name == "cp2xs1") return oriented(product(cp2(), sphere(1)));
  if (name == "cp2xs1-bip") return oriented(product(cp2(), bipartite_circle()));
  if (name == "cp2-torus") return oriented(mapping_torus(cp2(), identity_permutation(9)));
  if (name == "s2xs2") return oriented(product(sphere(2), sphere(2)));
  if (name == "s3xs1") return oriented(product(sphere(3), sphere(1)));
  if (name == "s2xs1") return oriented(product(sphere(2), sphere(1)));
  if (name == "disk") return disk(2);
  if (name == "solid-torus") return product(disk(2), sphere(1));
  if (name == "thick-sphere") return product(sphere(2), disk(1));
  throw ContractError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"s1", "s2", "s3", "s4", "s5", "t1", "t2", "t3", "t4", "t5", "rp2", "cp2", "cp2xs1", "cp2xs1-bip", "cp2-torus",
          "s2xs2", "s3xs1", "s2xs1", "disk", "solid-torus", "thick-sphere"};
}

}  // namespace scissors::fixtures
