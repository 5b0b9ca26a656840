#include "scissors/chain_complex.hpp"

#include <algorithm>
#include <string>

#include "scissors/errors.hpp"

namespace scissors {

void axpy(SparseVector& x, const Integer& factor, const SparseVector& y) {
  if (sgn(factor) == 0 || y.empty()) return;
  SparseVector out;
  out.reserve(x.size() + y.size());
  auto xi = x.begin();
  auto yi = y.begin();
  while (xi != x.end() || yi != y.end()) {
    if (yi == y.end() || (xi != x.end() && xi->first < yi->first)) {
      out.push_back(std::move(*xi++));
    } else if (xi == x.end() || yi->first < xi->first) {
      out.emplace_back(yi->first, factor * yi->second);
      ++yi;
    } else {
      Integer v = xi->second + factor * yi->second;
      if (sgn(v) != 0) out.emplace_back(xi->first, std::move(v));
      ++xi;
      ++yi;
    }
  }
  x = std::move(out);
}

Integer coefficient(const SparseVector& x, std::uint32_t index) {
  auto it = std::lower_bound(x.begin(), x.end(), index,
                             [](const auto& e, std::uint32_t i) { return e.first < i; });
  if (it != x.end() && it->first == index) return it->second;
  return 0;
}

SparseVector from_dense(const std::vector<Integer>& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

std::vector<Integer> to_dense(const SparseVector& v, std::size_t size) {
  std::vector<Integer> d(size);
  for (const auto& [i, x] : v) {
    if (i >= size) throw ContractError("sparse vector index out of range");
    d[i] = x;
  }
  return d;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0) s.columns[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c));
  return s;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) m(r, c) = v;
  return m;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (const auto& [c, v] : x) {
    if (c >= cols) throw ContractError("SparseMatrix::apply: index out of range");
    axpy(y, v, columns[c]);
  }
  return y;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns)
    if (!c.empty()) return false;
  return true;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

namespace {

template <bool Parallel>
SparseMatrix multiply_impl(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw ContractError("sparse product: shape mismatch");
  SparseMatrix p(a.rows, b.cols);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(b.cols);
#pragma omp parallel for schedule(dynamic, 64) if (Parallel)
  for (std::ptrdiff_t j = 0; j < n; ++j) p.columns[j] = a.apply(b.columns[j]);
  return p;
}

}  // namespace

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) { return multiply_impl<true>(a, b); }
SparseMatrix multiply_serial(const SparseMatrix& a, const SparseMatrix& b) {
  return multiply_impl<false>(a, b);
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.empty()) ranks_.push_back(0);
  if (boundaries_.size() + 1 != ranks_.size())
    throw StructuralError("chain complex: expected " + std::to_string(ranks_.size() - 1) +
                          " boundary matrices, got " + std::to_string(boundaries_.size()));
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    const auto& d = boundaries_[n - 1];
    if (d.rows != ranks_[n - 1] || d.cols != ranks_[n])
      throw StructuralError("chain complex: boundary d_" + std::to_string(n) + " has shape " +
                            std::to_string(d.rows) + "x" + std::to_string(d.cols) + ", expected " +
                            std::to_string(ranks_[n - 1]) + "x" + std::to_string(ranks_[n]));
  }
  // d_n o d_{n+1} = 0, degrees checked in parallel.
  const std::ptrdiff_t top = static_cast<std::ptrdiff_t>(ranks_.size()) - 1;
  std::vector<char> bad(ranks_.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t n = 1; n < top; ++n)
    bad[n] = !multiply_serial(boundaries_[n - 1], boundaries_[n]).is_zero();
  for (std::ptrdiff_t n = 1; n < top; ++n)
    if (bad[n])
      throw StructuralError("chain complex: d_" + std::to_string(n) + " o d_" + std::to_string(n + 1) +
                            " is not zero");
}

ChainComplex ChainComplex::from_dense(const std::vector<IntMatrix>& boundaries) {
  std::vector<std::size_t> ranks;
  if (boundaries.empty()) return ChainComplex({0}, {});
  ranks.push_back(boundaries.front().rows());
  std::vector<SparseMatrix> sparse;
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    if (i > 0 && boundaries[i].rows() != boundaries[i - 1].cols())
      throw StructuralError("chain complex: d_" + std::to_string(i + 1) + " has " +
                            std::to_string(boundaries[i].rows()) + " rows but C_" + std::to_string(i) +
                            " has rank " + std::to_string(boundaries[i - 1].cols()));
    ranks.push_back(boundaries[i].cols());
    sparse.push_back(SparseMatrix::from_dense(boundaries[i]));
  }
  return ChainComplex(std::move(ranks), std::move(sparse));
}

std::size_t ChainComplex::rank(int n) const {
  if (n < 0 || n > top_degree()) return 0;
  return ranks_[n];
}

SparseMatrix ChainComplex::boundary(int n) const {
  if (n >= 1 && n <= top_degree()) return boundaries_[n - 1];
  return SparseMatrix(rank(n - 1), rank(n));
}

long ChainComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t n = 0; n < ranks_.size(); ++n) chi += (n % 2 ? -1L : 1L) * static_cast<long>(ranks_[n]);
  return chi;
}

void check_chain_map(const ChainComplex& src, const ChainComplex& dst, const ChainMap& f) {
  const int top = src.top_degree();
  if (static_cast<int>(f.components.size()) != top + 1)
    throw StructuralError("chain map: expected " + std::to_string(top + 1) + " components");
  for (int n = 0; n <= top; ++n) {
    const auto& fn = f.components[n];
    if (fn.cols != src.rank(n) || fn.rows != dst.rank(n))
      throw StructuralError("chain map: component " + std::to_string(n) + " has the wrong shape");
  }
  for (int n = 1; n <= top; ++n) {
    SparseMatrix lhs = multiply(dst.boundary(n), f.components[n]);
    SparseMatrix rhs = multiply(f.components[n - 1], src.boundary(n));
    if (!(lhs == rhs))
      throw StructuralError("chain map does not commute with the boundary in degree " + std::to_string(n));
  }
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (g.components.size() != f.components.size()) throw ContractError("compose: degree mismatch");
  ChainMap h;
  for (std::size_t n = 0; n < f.components.size(); ++n)
    h.components.push_back(multiply(g.components[n], f.components[n]));
  return h;
}

ChainMap identity_map(const ChainComplex& c) {
  ChainMap id;
  for (int n = 0; n <= c.top_degree(); ++n) {
    SparseMatrix m(c.rank(n), c.rank(n));
    for (std::size_t i = 0; i < c.rank(n); ++i) m.columns[i].emplace_back(static_cast<std::uint32_t>(i), 1);
    id.components.push_back(std::move(m));
  }
  return id;
}

}  // namespace scissors
