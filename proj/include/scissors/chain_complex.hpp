#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scissors/matrix.hpp"

namespace scissors {

/// Sparse integer vector: (index, nonzero value) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::uint32_t, Integer>>;

/// x += factor * y
void axpy(SparseVector& x, const Integer& factor, const SparseVector& y);
Integer coefficient(const SparseVector& x, std::uint32_t index);
SparseVector from_dense(const std::vector<Integer>& v);
std::vector<Integer> to_dense(const SparseVector& v, std::size_t size);

/// Column-major sparse integer matrix.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  static SparseMatrix from_dense(const IntMatrix& m);
  IntMatrix to_dense() const;
  SparseVector apply(const SparseVector& x) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.columns == b.columns;
  }
};

/// a * b; columns of the product are computed in parallel.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
/// Serial reference for multiply().
SparseMatrix multiply_serial(const SparseMatrix& a, const SparseMatrix& b);

/// Bounded integer chain complex C_0 <- C_1 <- ... <- C_top with exact
/// boundaries. Construction verifies shapes and d o d = 0.
class ChainComplex {
public:
  ChainComplex() = default;
  /// boundaries[n-1] is d_n : C_n -> C_{n-1} for n = 1..ranks.size()-1.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries);
  static ChainComplex from_dense(const std::vector<IntMatrix>& boundaries);

  int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const;
  /// d_n; a zero matrix of the right shape outside 1..top.
  SparseMatrix boundary(int n) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }

  long euler_characteristic() const;

private:
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> boundaries_;
};

/// f_n : C_n -> C'_n for every degree of the source.
struct ChainMap {
  std::vector<SparseMatrix> components;
};

/// Throws StructuralError naming the first degree where d' f != f d.
void check_chain_map(const ChainComplex& src, const ChainComplex& dst, const ChainMap& f);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap identity_map(const ChainComplex& c);

}  // namespace scissors
