#pragma once

#include <string>
#include <vector>

#include "scissors/triangulation.hpp"

namespace scissors::fixtures {

/// Boundary of the (n+1)-simplex, ascending facets.
Triangulation sphere(int n);
/// Circle with two vertices and edges (0 1), (1 0).
Triangulation two_vertex_circle();
/// Staircase n-torus: n-fold product of the two-vertex circle. Vertex ids are
/// bitmasks; facets are paths x, x^e_a, x^e_a^e_b, ... (2^n n! facets).
Triangulation torus(int n);
/// Four-vertex circle a0 = 0, b0 = 1, a1 = 2, b1 = 3 with edges (a b); swapping
/// b0 and b1 is an order-preserving reflection.
Triangulation bipartite_circle();
/// 6-vertex real projective plane.
Triangulation rp2();
/// 9-vertex complex projective plane (36 facets).
Triangulation cp2();
/// Closed 2-simplex and closed 1-simplex (manifolds with boundary).
Triangulation disk(int n);

/// XOR translation of the staircase torus.
VertexMap torus_translation(int n, std::uint32_t mask);
/// Coordinate permutation of the staircase torus: bit i moves to bit perm[i].
VertexMap torus_coordinate_permutation(int n, const std::vector<int>& perm);
/// (u, w) -> (a u, b w) on a staircase product with |b| vertices in the second factor.
VertexMap product_map(const VertexMap& a, const VertexMap& b);

/// Named fixtures: s1..s5, t1..t5, rp2, cp2, cp2xs1 (with the 3-edge circle),
/// cp2xs1-bip (with the bipartite circle), cp2-torus (identity mapping torus), s2xs2, s3xs1, s2xs1,
/// disk, solid-torus, thick-sphere. Orientable closed fixtures carry an orientation.
Triangulation fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace scissors::fixtures
