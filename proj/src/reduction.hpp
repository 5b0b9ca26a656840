#pragma once

#include <cstdint>
#include <vector>

#include "scissors/chain_complex.hpp"

namespace scissors::detail {

/// Algebraic reduction of a chain complex by repeatedly cancelling pairs
/// (a, b) with b a face of a carrying coefficient +-1. The surviving cells
/// span a smaller complex C' with chain homotopy equivalences
/// project: C -> C' and lift: C' -> C.
class Reduction {
public:
  explicit Reduction(const ChainComplex& c);

  int top_degree() const { return top_; }
  std::size_t reduced_rank(int n) const { return n < 0 || n > top_ ? 0 : survivors_[n].size(); }
  /// Dense boundary d'_n of the reduced complex.
  IntMatrix reduced_boundary(int n) const;

  /// Chain-level projection of x in C_n, as a dense vector over the survivors of degree n.
  std::vector<Integer> project(int n, const SparseVector& x) const;
  /// Chain-level inclusion of a dense reduced chain back into C_n.
  SparseVector lift(int n, const std::vector<Integer>& y) const;

private:
  struct Step {
    int n;  // degree of a; b lives in degree n-1
    std::uint32_t a, b;
    Integer lambda;
    SparseVector col_a;  // d(a) without the b entry
    SparseVector row_b;  // (c, <dc, b>) for the other cells c of degree n
  };

  void eliminate(int n, std::uint32_t a, std::uint32_t b);

  int top_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<SparseVector>> col_;                 // col_[n][cell] = boundary, degree n-1 ids
  std::vector<std::vector<std::vector<std::uint32_t>>> cob_;  // cob_[n][cell] = sorted degree n+1 ids
  std::vector<std::vector<std::int64_t>> step_of_;            // step index removing the cell, or -1
  std::vector<Step> steps_;
  std::vector<std::vector<std::size_t>> steps_by_a_degree_;
  std::vector<std::vector<std::uint32_t>> survivors_;
  std::vector<std::vector<std::int64_t>> position_;            // survivor position or -1
};

}  // namespace scissors::detail
