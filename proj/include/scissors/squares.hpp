#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "scissors/fg_group.hpp"
#include "scissors/matrix.hpp"
#include "scissors/simplicial.hpp"

namespace scissors {

/// Distinguished square, as morphism indices:
///   A --top--> B
///   |          |
///  left      right
///   v          v
///   C -bottom-> D
struct Square {
  std::size_t top = 0, left = 0, right = 0, bottom = 0;
  auto operator<=>(const Square&) const = default;
};

/// Finite category with horizontal and vertical morphism classes, distinguished
/// squares, an initial object, a partition into iso-classes and an optional
/// union pairing. Every object gets identities "id(X)" in both classes;
/// composites with identities are implicit.
class SquaresCategory {
public:
  struct Morphism {
    std::string id;
    std::size_t src = 0, dst = 0;
  };

  std::size_t add_object(const std::string& id, bool initial = false);
  std::size_t add_hmor(const std::string& id, const std::string& src, const std::string& dst);
  std::size_t add_vmor(const std::string& id, const std::string& src, const std::string& dst);
  /// g o f = fg with f first.
  void set_hcomp(const std::string& f, const std::string& g, const std::string& fg);
  void set_vcomp(const std::string& f, const std::string& g, const std::string& fg);
  void add_square(const std::string& top, const std::string& left, const std::string& right, const std::string& bottom);
  /// Adds (f, id, id, f) for every horizontal f and (id, g, g, id) for every vertical g.
  void add_identity_squares();
  void add_isoclass(const std::vector<std::string>& objects);
  /// Designated union a u b = c.
  void add_union(const std::string& a, const std::string& b, const std::string& c);

  std::size_t object_count() const { return objects_.size(); }
  const std::string& object(std::size_t i) const { return objects_.at(i); }
  std::optional<std::size_t> find_object(const std::string& id) const;
  std::optional<std::size_t> initial() const { return initial_; }

  const std::vector<Morphism>& hmors() const { return hmors_; }
  const std::vector<Morphism>& vmors() const { return vmors_; }
  std::optional<std::size_t> find_hmor(const std::string& id) const;
  std::optional<std::size_t> find_vmor(const std::string& id) const;
  std::size_t hid(std::size_t obj) const { return hid_.at(obj); }
  std::size_t vid(std::size_t obj) const { return vid_.at(obj); }
  /// g o f; nullopt when the table has no entry.
  std::optional<std::size_t> hcompose(std::size_t f, std::size_t g) const;
  std::optional<std::size_t> vcompose(std::size_t f, std::size_t g) const;
  /// The unique morphism src -> dst, if exactly one exists.
  std::optional<std::size_t> unique_hmor(std::size_t src, std::size_t dst) const;
  std::optional<std::size_t> unique_vmor(std::size_t src, std::size_t dst) const;

  const std::set<Square>& squares() const { return squares_; }
  bool distinguished(const Square& s) const { return squares_.count(s) > 0; }
  /// Corners (A, B, C, D) of a square.
  std::array<std::size_t, 4> corners(const Square& s) const;

  /// Iso-classes as declared, objects not mentioned become singleton classes
  /// (in object order, after the declared ones).
  std::vector<std::vector<std::size_t>> isoclasses() const;
  const std::vector<std::vector<std::size_t>>& declared_isoclasses() const { return isoclasses_; }
  std::optional<std::size_t> union_of(std::size_t a, std::size_t b) const;
  const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& unions() const { return unions_; }

  std::string square_text(const Square& s) const;

private:
  std::size_t add_mor(std::vector<Morphism>& list, std::map<std::string, std::size_t>& index, const std::string& id,
                      const std::string& src, const std::string& dst);
  std::size_t object_index(const std::string& id) const;

  std::vector<std::string> objects_;
  std::map<std::string, std::size_t> object_index_;
  std::optional<std::size_t> initial_;
  std::vector<Morphism> hmors_, vmors_;
  std::map<std::string, std::size_t> hindex_, vindex_;
  std::vector<std::size_t> hid_, vid_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> hcomp_, vcomp_;
  std::set<Square> squares_;
  std::vector<std::vector<std::size_t>> isoclasses_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> unions_;
};

struct SquaresReport {
  bool valid = true;
  std::vector<std::string> violations;  // one line per violation, with a witness
};

/// Checks composition tables, identity squares, pasting closure, the initial
/// object, the iso-class partition and coherence of the union pairing.
SquaresReport validate_squares(const SquaresCategory& c);
/// Throws ContractError with the first violation.
void require_valid(const SquaresCategory& c);

/// K0 = Z[iso-classes] / ([initial] = 0, [A] + [D] = [B] + [C]).
struct K0Presentation {
  FgAbGroup group;
  std::vector<std::string> generators;                     // one per canonical generator
  std::vector<std::string> class_labels;                   // "[X]" per iso-class
  std::vector<std::vector<Integer>> class_coordinates;     // canonical coordinates per iso-class
  std::vector<std::size_t> class_of;                       // object -> iso-class

  /// Coordinates of the class of an object.
  const std::vector<Integer>& coordinates(std::size_t object) const { return class_coordinates.at(class_of.at(object)); }
};

/// Presentation reduced by Smith normal form. The free part is put in Hermite
/// normal form so generators are, where possible, classes of single objects.
K0Presentation k0_presentation(const SquaresCategory& c);

/// target / im(d0 - d1) for homomorphisms given on canonical generators
/// (target generators x source generators).
FgAbGroup coequalizer_pi0(const FgAbGroup& source, const FgAbGroup& target, const IntMatrix& d0, const IntMatrix& d1);

/// n x n grid of distinguished squares on an (n+1) x (n+1) grid of objects.
struct GridSimplex {
  int n = 0;
  std::vector<std::size_t> objects;  // (n+1)^2, row-major
  std::vector<std::size_t> h;        // (n+1) x n: X(i, j) -> X(i, j+1)
  std::vector<std::size_t> v;        // n x (n+1): X(i, j) -> X(i+1, j)

  std::size_t object(int i, int j) const { return objects[i * (n + 1) + j]; }
  std::size_t hmor(int i, int j) const { return h[i * n + j]; }
  std::size_t vmor(int i, int j) const { return v[i * (n + 1) + j]; }
  auto operator<=>(const GridSimplex&) const = default;
};

/// Every cell distinguished and all endpoints consistent.
bool is_grid(const SquaresCategory& c, const GridSimplex& g);
/// Deletes row and column k, composing the morphisms across it.
GridSimplex grid_face(const SquaresCategory& c, const GridSimplex& g, int k);
/// Repeats row and column k with identities.
GridSimplex grid_degeneracy(const SquaresCategory& c, const GridSimplex& g, int k);
/// All grids of degree n in a deterministic order; ResourceError past the budget.
std::vector<GridSimplex> enumerate_grids(const SquaresCategory& c, int n, std::size_t budget = 1000000);
std::string grid_label(const SquaresCategory& c, const GridSimplex& g);

/// Grid nerve truncated at n_max: nondegenerate grids of degree <= n_max with
/// faces resolved into (nondegenerate grid, degeneracy word).
SimplicialObject grid_nerve(const SquaresCategory& c, int n_max, std::size_t budget = 1000000);

/// A (2m+1)-string of pieces W_m .. W_1 W_0 W'_1 .. W'_m (objects), sent to the
/// m x m grid with U(i, j) = W_i u .. u W_0 u .. u W'_j at (i, j), W_0 in the
/// upper left corner. Morphisms are the unique inclusions; each cell must be
/// distinguished, else ContractError.
GridSimplex string_to_grid(const SquaresCategory& c, const std::vector<std::size_t>& pieces);
/// Face i of the edgewise subdivision on a piece string: nerve face d_{m+1+i},
/// then d_{m-i}, where inner nerve faces take unions of adjacent pieces.
std::vector<std::size_t> string_sd_face(const SquaresCategory& c, const std::vector<std::size_t>& pieces, int i);
/// Piece strings of length 2m+1 whose consecutive unions are all defined.
std::vector<std::vector<std::size_t>> composable_strings(const SquaresCategory& c, int m);

// Toy categories.
/// Subsets of {0, .., n-1} with inclusions in both directions, pushout squares,
/// iso-classes by cardinality and disjoint union.
SquaresCategory finite_sets(int n = 3);
/// Objects 0..n, unique morphisms a -> b for a <= b, squares with A + D = B + C, union a + b.
SquaresCategory sizes(int n = 3);
/// Only the initial object.
SquaresCategory empty_category();
/// Objects {0, A} with identity squares only.
SquaresCategory point_category();
/// Objects {0, A, B}: 0 -> A -> B both ways, a square forcing [B] = 2[A].
SquaresCategory doubling_category();

// Text format: `object <id> [initial]`, `hmor <id> <src> <dst>`, `vmor ...`,
// `hcomp <f> <g> <fg>`, `vcomp ...`, `square <top> <left> <right> <bottom>`,
// `identity-squares`, `isoclass <id> ..`, `union <a> <b> <c>`, `#` comments.
SquaresCategory parse_squares(std::istream& in);
SquaresCategory parse_squares(const std::string& text);
std::string to_text(const SquaresCategory& c);

}  // namespace scissors
