#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scissors/chain_complex.hpp"
#include "scissors/fg_group.hpp"

namespace scissors {

using Tuple = std::vector<std::uint32_t>;
/// Vertex permutation: v -> perm[v].
using VertexMap = std::vector<std::uint32_t>;

/// Facet list of a d-dimensional pseudomanifold. Faces are identified by
/// their ordered vertex tuples (a Delta-complex); simplicial complexes are
/// written with ascending facets.
struct Triangulation {
  int dim = 0;
  std::size_t vertices = 0;
  std::vector<Tuple> facets;
  std::optional<std::vector<int>> orientation;  // +-1 per facet
  std::optional<VertexMap> perm;                // automorphism carried by the file
  std::optional<std::string> bordism;           // bordism label carried by the file (d >= 5)

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// All faces of all dimensions, sorted lexicographically per dimension.
class FaceLattice {
public:
  explicit FaceLattice(const Triangulation& t);

  int dim() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Tuple>& faces(int k) const { return faces_.at(k); }
  std::size_t count(int k) const { return k < 0 || k > dim() ? 0 : faces_[k].size(); }
  std::optional<std::size_t> find(int k, const Tuple& face) const;
  /// Faces of dimension k with the given vertex set (as indices into faces(k)).
  std::vector<std::size_t> find_by_vertex_set(int k, const Tuple& face) const;

  /// Ordered simplicial chains: d(v0..vk) = sum (-1)^i (v0..^vi..vk).
  ChainComplex chains() const;
  long euler_characteristic() const;

private:
  std::vector<std::vector<Tuple>> faces_;
  std::vector<std::vector<std::pair<Tuple, std::size_t>>> by_set_;  // sorted vertex set -> face index; empty when every face is increasing
};

struct ValidationReport {
  bool valid = true;                  // closed pseudomanifold, orientation (if given) consistent
  std::vector<std::string> problems;  // one line per violated invariant, with a witness
  bool connected = false;
  bool orientable = false;            // top homology is Z (closed) or facets orient coherently (with boundary)
  std::size_t boundary_ridges = 0;    // ridges lying in exactly one facet
  FgAbGroup top_homology;
  long euler_characteristic = 0;
};

/// Structural checks with witnesses; never throws for invalid combinatorics.
/// With allow_boundary, ridges in a single facet are accepted (a pseudomanifold
/// with boundary) and only counted.
ValidationReport validate(const Triangulation& t, bool allow_boundary = false);
/// Throws ContractError with the first problem when t is not a valid closed pseudomanifold.
void require_valid(const Triangulation& t);

/// Facet signs making the fundamental chain a cycle, facet 0 of each
/// component positive; nullopt when non-orientable or not a closed pseudomanifold.
std::optional<std::vector<int>> compute_orientation(const Triangulation& t);

long euler_characteristic(const Triangulation& t);

/// Checks that perm is a bijection of the vertex set.
void require_permutation(const Triangulation& t, const VertexMap& perm);

/// Staircase product: lattice-path shuffles of ordered facets; vertex (u, w) gets id u * b.vertices + w.
Triangulation product(const Triangulation& a, const Triangulation& b);

/// Barycentric subdivision: vertices are the faces of t (indexed by dimension,
/// then lattice order); facets are flags ordered by increasing dimension.
struct Subdivision {
  Triangulation triangulation;
  std::vector<std::pair<int, std::size_t>> vertex_face;  // new vertex -> (dim, face index)
};
Subdivision barycentric_subdivision(const Triangulation& t);

// Text format: `dim <d>`, `vertices <n>`, `facet v0 .. vd` lines, optional
// `orient <+-1>` lines in facet order, optional `perm v'0 .. v'(n-1)` and
// optional `bordism <label>`.
Triangulation parse_triangulation(std::istream& in);
Triangulation parse_triangulation(const std::string& text);
std::string to_text(const Triangulation& t);

}  // namespace scissors
