#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scissors/chain_complex.hpp"

namespace scissors {

enum class SimplicialKind { simplicial, semisimplicial };

/// Degeneracy word s_{i1} s_{i2} ... s_{ik}, stored outermost first, in the
/// normal form i1 > i2 > ... > ik.
using DegeneracyWord = std::vector<int>;

/// Rewrites a composite s_{a1} ... s_{ak} (outermost first) into normal form
/// using s_i s_j = s_{j+1} s_i for i <= j.
DegeneracyWord normalize_word(std::vector<int> composite);
/// "s2s0"; empty word gives "".
std::string word_to_string(const DegeneracyWord& w);
/// Parses "s2s0"; throws ContractError on malformed input.
DegeneracyWord parse_word(const std::string& text);

/// A nondegenerate simplex, addressed by degree and index within the degree.
struct SimplexRef {
  int degree = 0;
  std::size_t id = 0;
  auto operator<=>(const SimplexRef&) const = default;
};

/// An arbitrary simplex s_w(base) of the presented object.
struct Element {
  SimplexRef base;
  DegeneracyWord word;

  int degree() const { return base.degree + static_cast<int>(word.size()); }
  bool degenerate() const { return !word.empty(); }
  auto operator<=>(const Element&) const = default;
};

/// d_i of a nondegenerate n-simplex: target index in degree n-1-|word|, plus word.
struct FaceTarget {
  std::size_t id = 0;
  DegeneracyWord word;
};

struct Simplex {
  std::string label;
  std::vector<FaceTarget> faces;  // faces[i] = d_i, i = 0..n; empty in degree 0
};

/// Finite simplicial or semisimplicial set presented by its nondegenerate
/// simplices. Construction validates references, normal forms and the
/// identities d_i d_j = d_{j-1} d_i (i < j) on every simplex.
class SimplicialObject {
public:
  SimplicialObject() = default;
  SimplicialObject(SimplicialKind kind, std::vector<std::vector<Simplex>> simplices);

  SimplicialKind kind() const { return kind_; }
  /// Highest degree holding a nondegenerate simplex; -1 when empty.
  int top_degree() const { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t count(int n) const;
  std::vector<std::size_t> counts() const;
  const Simplex& simplex(int n, std::size_t id) const;
  const Simplex& simplex(SimplexRef r) const { return simplex(r.degree, r.id); }
  std::optional<SimplexRef> find(const std::string& label) const;

  Element element(SimplexRef r) const { return Element{r, {}}; }
  Element face(const Element& x, int i) const;
  /// s_i x; only in the simplicial kind.
  Element degeneracy(const Element& x, int i) const;
  std::string label(const Element& x) const;

private:
  void validate() const;

  SimplicialKind kind_ = SimplicialKind::simplicial;
  std::vector<std::vector<Simplex>> simplices_;
  std::map<std::string, SimplexRef> by_label_;
};

/// Finite category presented by objects, morphisms and a composition table.
/// Either every object has a designated identity (unital) or none has.
/// Composites with a designated identity are implicit unless listed.
class FiniteCategory {
public:
  struct Morphism {
    std::string id;
    std::size_t src = 0, dst = 0;
  };

  std::size_t add_object(const std::string& id);
  std::size_t add_morphism(const std::string& id, const std::string& src, const std::string& dst);
  /// Declares an identity morphism for obj, named "id(obj)" unless given.
  std::size_t add_identity(const std::string& obj, const std::string& id = "");
  /// g o f = h, where f runs first.
  void set_composite(const std::string& f, const std::string& g, const std::string& h);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object(std::size_t i) const { return objects_[i]; }
  const Morphism& morphism(std::size_t i) const { return morphisms_[i]; }
  std::optional<std::size_t> find_object(const std::string& id) const;
  std::optional<std::size_t> find_morphism(const std::string& id) const;
  bool unital() const { return !identity_.empty() && identity_.size() == objects_.size(); }
  std::optional<std::size_t> identity(std::size_t obj) const;
  bool is_identity(std::size_t m) const;
  /// g o f; nullopt if the table has no entry.
  std::optional<std::size_t> find_composite(std::size_t f, std::size_t g) const;
  /// g o f; throws ContractError if undefined.
  std::size_t compose(std::size_t f, std::size_t g) const;

  /// Totality on composable pairs, endpoint compatibility, identity laws and
  /// associativity. Throws StructuralError naming the violating data.
  void validate() const;

private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::map<std::string, std::size_t> object_index_, morphism_index_;
  std::map<std::size_t, std::size_t> identity_;  // object -> identity morphism
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> composite_;
};

/// Nerve: n-simplices are composable strings x0 -f1-> ... -fn-> xn. Unital
/// categories give the simplicial kind (nondegenerate = no identities), others
/// the semisimplicial kind. Throws ResourceError when nondegenerate strings
/// exist beyond max_degree (categories with non-identity loops).
SimplicialObject nerve(const FiniteCategory& cat, int max_degree = 32);

/// Same simplices and faces, degeneracies adjoined freely.
SimplicialObject free_degeneracies(const SimplicialObject& x);

/// Edgewise subdivision: (sd X)_n = X_{2n+1}, d_i = d_{n-i} d_{n+1+i},
/// s_i = s_{n-i} s_{n+1+i}.
SimplicialObject edgewise_subdivide(const SimplicialObject& x);

/// Normalized chains: C_n free on nondegenerate n-simplices, degenerate faces contribute 0.
ChainComplex normalized_chains(const SimplicialObject& x);

/// All elements of X_n, nondegenerate or not (simplicial kind), in a fixed order.
std::vector<Element> all_elements(const SimplicialObject& x, int n);

// Text format: `kind simplicial|semisimplicial`, `simplex <degree> <id>`,
// `face <id> <i> <target-id> [<word>]`, `#` comments.
SimplicialObject parse_simplicial(std::istream& in);
SimplicialObject parse_simplicial(const std::string& text);
std::string to_text(const SimplicialObject& x);

}  // namespace scissors
