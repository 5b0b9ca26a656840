#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "scissors/homology.hpp"
#include "scissors/triangulation.hpp"

namespace scissors {

/// A validated closed pseudomanifold together with its face lattice and
/// homology bases, so repeated automorphism queries share the setup cost.
class Manifold {
public:
  explicit Manifold(Triangulation t);

  const Triangulation& triangulation() const { return t_; }
  int dim() const { return t_.dim; }
  const FaceLattice& faces() const { return *faces_; }
  const HomologyBasis& homology() const { return *basis_; }
  const std::vector<FgAbGroup>& groups() const { return basis_->groups(); }
  std::vector<std::size_t> betti() const;
  long euler_characteristic() const { return faces_->euler_characteristic(); }
  bool orientable() const { return orientation_.has_value(); }
  /// Facet signs: the file's orientation when given, else the propagated one.
  const std::optional<std::vector<int>>& orientation() const { return orientation_; }

private:
  Triangulation t_;
  std::shared_ptr<const FaceLattice> faces_;
  std::shared_ptr<const HomologyBasis> basis_;
  std::optional<std::vector<int>> orientation_;
};

/// Image of face k-face under phi: (index, sign). Exact tuple match first,
/// else the unique face with the same vertex set, signed by the reordering.
/// Throws ContractError when no face or several faces qualify.
std::pair<std::size_t, int> map_face(const FaceLattice& lattice, int k, const Tuple& face, const VertexMap& phi);

/// Chain automorphism induced by phi on ordered chains.
ChainMap automorphism_chain_map(const Manifold& m, const VertexMap& phi);
HomologyMap automorphism_action(const Manifold& m, const VertexMap& phi);
HomologyMap automorphism_action(const Triangulation& t, const VertexMap& phi);

/// Sign of the top-degree determinant: +1 orientation-preserving, -1 reversing.
int orientation_character(const Manifold& m, const VertexMap& phi);

/// Kervaire semicharacteristic sum_{i <= (d-1)/2} b_{2i} mod 2; d odd only.
int kervaire_semicharacteristic(const Manifold& m);
int kervaire_semicharacteristic(const Triangulation& t);

/// prod_i det(phi_{*,i}) in {+1, -1}.
int k1_class(const Manifold& m, const VertexMap& phi);
int k1_class(const Triangulation& t, const VertexMap& phi);

/// det(phi_i) det(phi_{d-i}) == det(phi_d)^{rank H_i}; t must be orientable.
bool check_duality_identity(const Manifold& m, const VertexMap& phi, int i);
bool check_duality_identity(const Triangulation& t, const VertexMap& phi, int i);

/// phi preserves facets and the induced chain map is well defined.
bool is_automorphism(const Manifold& m, const VertexMap& phi);
/// Up to `limit` facet-preserving vertex permutations found by backtracking, identity first.
std::vector<VertexMap> find_automorphisms(const Triangulation& t, std::size_t limit);

VertexMap compose(const VertexMap& g, const VertexMap& f);  // g o f
VertexMap inverse(const VertexMap& f);
VertexMap identity_permutation(std::size_t n);

/// Mapping torus T_phi as three staircase prism layers t x [0,3] with (v, 3)
/// glued to (phi v, 0). The gluing needs phi to carry every facet tuple onto a
/// facet tuple; otherwise t is barycentrically subdivided first (phi then
/// preserves the flag order), unless allow_subdivision is false, in which case
/// a ContractError is thrown.
Triangulation mapping_torus(const Triangulation& t, const VertexMap& phi, bool allow_subdivision = true);

/// Compact pseudomanifold with boundary (ridges in one or two facets) and a facet subset.
struct SubcomplexInclusion {
  Triangulation host;
  std::vector<std::size_t> selected;
};

/// Connected components (via shared vertices) of the ridges lying in exactly one facet.
std::vector<std::vector<Tuple>> boundary_components(const Triangulation& t);

/// Each boundary component of the subobject is a whole boundary component of
/// the host, or has no vertex on the host boundary.
bool is_sk_embedding(const SubcomplexInclusion& inc);

}  // namespace scissors
