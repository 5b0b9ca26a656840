#pragma once

#include <memory>
#include <vector>

#include "scissors/chain_complex.hpp"
#include "scissors/fg_group.hpp"

namespace scissors {

namespace detail {
class Reduction;
}

/// H_n for n = 0..top. Cancels unit-coefficient pairs first, then runs Smith
/// normal form on the (small) reduced complex; degrees are processed in parallel.
std::vector<FgAbGroup> homology(const ChainComplex& c);

/// Reference route: Smith normal form of the full dense boundary matrices.
std::vector<FgAbGroup> homology_dense(const ChainComplex& c);

/// Canonical generators of H_n: torsion generators (in divisibility order)
/// followed by free generators, matching FgAbGroup's canonical form. Bases
/// come from the Smith change-of-basis matrices and are deterministic.
class HomologyBasis {
public:
  explicit HomologyBasis(ChainComplex c);
  ~HomologyBasis();
  HomologyBasis(HomologyBasis&&) noexcept;
  HomologyBasis& operator=(HomologyBasis&&) noexcept;

  const ChainComplex& complex() const { return complex_; }
  int top_degree() const { return complex_.top_degree(); }
  const std::vector<FgAbGroup>& groups() const { return groups_; }
  const FgAbGroup& group(int n) const;

  /// Cycle representatives in C_n of the canonical generators.
  const std::vector<SparseVector>& generators(int n) const;
  /// Coordinates of the class of a cycle: torsion entries reduced into [0, d),
  /// then free entries. Throws ContractError if z is not a cycle.
  std::vector<Integer> coordinates(int n, const SparseVector& z) const;

private:
  struct Degree {
    IntMatrix coord;                   // rows map reduced chains to class coordinates
    std::vector<Integer> orders;       // per coord row: invariant factor, 0 for free rows
    std::vector<std::size_t> torsion;  // coord rows carrying torsion generators
    std::vector<std::size_t> free;     // coord rows carrying free generators
    std::vector<SparseVector> generators;
  };

  ChainComplex complex_;
  std::unique_ptr<detail::Reduction> reduction_;
  std::vector<FgAbGroup> groups_;
  std::vector<Degree> degrees_;
};

/// Map on homology in the canonical bases: per degree the matrix on H_n/tors
/// and the action on the torsion generators (entries reduced mod the target orders).
struct HomologyMap {
  std::vector<FgAbGroup> source;
  std::vector<FgAbGroup> target;
  std::vector<IntMatrix> free_part;
  std::vector<IntMatrix> torsion_part;

  friend bool operator==(const HomologyMap& a, const HomologyMap& b) {
    return a.source == b.source && a.target == b.target && a.free_part == b.free_part &&
           a.torsion_part == b.torsion_part;
  }
};

/// Validates f as a chain map, then expresses f_* in the canonical bases.
HomologyMap induced_map(const HomologyBasis& src, const HomologyBasis& dst, const ChainMap& f);
HomologyMap induced_map(const ChainComplex& src, const ChainComplex& dst, const ChainMap& f);

HomologyMap identity_map(const std::vector<FgAbGroup>& groups);
/// g o f
HomologyMap compose(const HomologyMap& g, const HomologyMap& f);

/// Determinant of the free part in degree n; 1 for rank 0. Throws
/// ContractError when the free part is not square.
Integer free_determinant(const HomologyMap& h, int n);

}  // namespace scissors
