#include "reduction.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "scissors/errors.hpp"

namespace scissors::detail {
namespace {

void insert_sorted(std::vector<std::uint32_t>& v, std::uint32_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

void erase_sorted(std::vector<std::uint32_t>& v, std::uint32_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

void erase_entry(SparseVector& v, std::uint32_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::uint32_t i) { return e.first < i; });
  if (it != v.end() && it->first == index) v.erase(it);
}

}  // namespace

Reduction::Reduction(const ChainComplex& c) : top_(c.top_degree()), ranks_(c.ranks()) {
  const int top = top_;
  col_.resize(top + 1);
  cob_.resize(top + 1);
  step_of_.resize(top + 1);
  steps_by_a_degree_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    cob_[n].resize(ranks_[n]);
    step_of_[n].assign(ranks_[n], -1);
    if (n == 0) {
      col_[n].resize(ranks_[n]);
      continue;
    }
    SparseMatrix d = c.boundary(n);
    col_[n] = std::move(d.columns);
  }
  for (int n = 1; n <= top; ++n)
    for (std::uint32_t a = 0; a < ranks_[n]; ++a)
      for (const auto& [r, v] : col_[n][a]) cob_[n - 1][r].push_back(a);  // ascending a keeps rows sorted

  // Top-down: once degree n has no unit entries left, later eliminations in
  // lower degrees only delete entries from degree-n columns and cannot create units.
  for (int n = top; n >= 1; --n) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t a = 0; a < ranks_[n]; ++a) {
        if (step_of_[n][a] >= 0) continue;
        std::int64_t best = -1;
        std::size_t best_cost = 0;
        for (const auto& [b, v] : col_[n][a]) {
          if (mpz_cmpabs_ui(v.get_mpz_t(), 1) != 0) continue;
          std::size_t cost = cob_[n - 1][b].size();
          if (best < 0 || cost < best_cost) {
            best = b;
            best_cost = cost;
          }
        }
        if (best < 0) continue;
        eliminate(n, a, static_cast<std::uint32_t>(best));
        changed = true;
      }
    }
  }

  survivors_.resize(top + 1);
  position_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    position_[n].assign(ranks_[n], -1);
    for (std::uint32_t x = 0; x < ranks_[n]; ++x)
      if (step_of_[n][x] < 0) {
        position_[n][x] = static_cast<std::int64_t>(survivors_[n].size());
        survivors_[n].push_back(x);
      }
  }
}

void Reduction::eliminate(int n, std::uint32_t a, std::uint32_t b) {
  Step s;
  s.n = n;
  s.a = a;
  s.b = b;
  s.lambda = coefficient(col_[n][a], b);
  s.col_a = col_[n][a];
  erase_entry(s.col_a, b);

  const SparseVector full_a = col_[n][a];
  for (std::uint32_t c : std::vector<std::uint32_t>(cob_[n - 1][b])) {
    if (c == a) continue;
    Integer coef = coefficient(col_[n][c], b);
    s.row_b.emplace_back(c, coef);
    // col[c] -= coef * lambda^-1 * col[a]; lambda = +-1 so lambda^-1 = lambda.
    Integer factor = -coef * s.lambda;
    std::vector<char> before(full_a.size());
    for (std::size_t k = 0; k < full_a.size(); ++k)
      before[k] = sgn(coefficient(col_[n][c], full_a[k].first)) != 0;
    axpy(col_[n][c], factor, full_a);
    for (std::size_t k = 0; k < full_a.size(); ++k) {
      const std::uint32_t r = full_a[k].first;
      const bool after = sgn(coefficient(col_[n][c], r)) != 0;
      if (before[k] && !after) erase_sorted(cob_[n - 1][r], c);
      if (!before[k] && after) insert_sorted(cob_[n - 1][r], c);
    }
  }

  // Remove a: drop it from its faces' coboundaries and from the columns of its cofaces.
  for (const auto& [r, v] : full_a) erase_sorted(cob_[n - 1][r], a);
  if (n + 1 <= top_)
    for (std::uint32_t e : cob_[n][a]) erase_entry(col_[n + 1][e], a);
  cob_[n][a].clear();
  col_[n][a].clear();

  // Remove b: its coboundary is now empty; detach it from its own faces.
  if (n - 1 >= 1)
    for (const auto& [r, v] : col_[n - 1][b]) erase_sorted(cob_[n - 2][r], b);
  col_[n - 1][b].clear();
  cob_[n - 1][b].clear();

  const auto index = static_cast<std::int64_t>(steps_.size());
  step_of_[n][a] = index;
  step_of_[n - 1][b] = index;
  steps_by_a_degree_[n].push_back(steps_.size());
  steps_.push_back(std::move(s));
}

IntMatrix Reduction::reduced_boundary(int n) const {
  IntMatrix d(reduced_rank(n - 1), reduced_rank(n));
  if (n < 1 || n > top_) return d;
  for (std::size_t j = 0; j < survivors_[n].size(); ++j)
    for (const auto& [r, v] : col_[n][survivors_[n][j]]) {
      const auto p = position_[n - 1][r];
      if (p < 0) throw StructuralError("reduction: boundary references a cancelled cell");
      d(static_cast<std::size_t>(p), j) = v;
    }
  return d;
}

std::vector<Integer> Reduction::project(int n, const SparseVector& x) const {
  std::vector<Integer> out(reduced_rank(n));
  if (n < 0 || n > top_) return out;
  std::map<std::uint32_t, Integer> work;
  std::priority_queue<std::int64_t, std::vector<std::int64_t>, std::greater<>> queue;
  auto touch = [&](std::uint32_t cell) {
    if (step_of_[n][cell] >= 0) queue.push(step_of_[n][cell]);
  };
  for (const auto& [i, v] : x) {
    if (i >= ranks_[n]) throw ContractError("project: cell index out of range");
    work[i] += v;
    touch(i);
  }
  std::int64_t last = -1;
  while (!queue.empty()) {
    const std::int64_t j = queue.top();
    queue.pop();
    if (j == last) continue;
    last = j;
    const Step& s = steps_[j];
    if (s.n == n) {
      work.erase(s.a);
      continue;
    }
    auto it = work.find(s.b);
    if (it == work.end()) continue;
    const Integer v = it->second;
    work.erase(it);
    if (sgn(v) == 0) continue;
    const Integer factor = -s.lambda * v;
    for (const auto& [r, w] : s.col_a) {
      work[r] += factor * w;
      touch(r);
    }
  }
  for (const auto& [cell, v] : work) {
    const auto p = position_[n][cell];
    if (p >= 0) out[static_cast<std::size_t>(p)] = v;
  }
  return out;
}

SparseVector Reduction::lift(int n, const std::vector<Integer>& y) const {
  if (y.size() != reduced_rank(n)) throw ContractError("lift: vector length differs from reduced rank");
  if (n < 0 || n > top_) return {};
  std::vector<Integer> x(ranks_[n]);
  for (std::size_t k = 0; k < y.size(); ++k) x[survivors_[n][k]] = y[k];
  const auto& order = steps_by_a_degree_[n];
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Step& s = steps_[*it];
    Integer acc = 0;
    for (const auto& [c, coef] : s.row_b)
      if (sgn(x[c]) != 0) acc += x[c] * coef;
    x[s.a] = -s.lambda * acc;
  }
  return from_dense(x);
}

}  // namespace scissors::detail
