#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scissors/matrix.hpp"

namespace scissors {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
/// 1 < d_1 | d_2 | ... | d_k. The representation is canonical, so == is
/// isomorphism.
struct FgAbGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  FgAbGroup() = default;
  FgAbGroup(std::size_t rank, std::vector<Integer> tors = {});

  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank); }
  /// Cokernel of a relation matrix: Z^cols / (row space). Each row is a relation.
  static FgAbGroup from_relations(const IntMatrix& relations, std::size_t generators);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Generator count of the canonical form (torsion first, then free).
  std::size_t generator_count() const { return torsion.size() + free_rank; }

  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const FgAbGroup& a, const FgAbGroup& b) { return !(a == b); }
};

/// "0", "Z", "Z^3", "Z/2", "Z + Z/2 + Z/4", ...
std::string to_string(const FgAbGroup& g);
std::ostream& operator<<(std::ostream& os, const FgAbGroup& g);

}  // namespace scissors
