#include "scissors/forms.hpp"

#include <gmpxx.h>

#include "scissors/errors.hpp"
#include "scissors/homology.hpp"

namespace scissors {

IntMatrix intersection_form(const Triangulation& t, const std::optional<std::vector<int>>& orientation) {
  if (t.dim != 4) throw ContractError("intersection form needs dimension 4, got " + std::to_string(t.dim));
  require_valid(t);
  std::optional<std::vector<int>> eps = orientation ? orientation : t.orientation;
  if (!eps) eps = compute_orientation(t);
  if (!eps) throw ContractError("intersection form needs an orientable triangulation");
  if (orientation) {
    Triangulation check = t;
    check.orientation = orientation;
    auto r = validate(check);
    if (!r.valid) throw ContractError("intersection form: " + r.problems.front());
  }

  // Cochains as a chain complex: degree j holds C^{4-j}, boundary d_j = (d_{5-j})^T.
  const FaceLattice lattice(t);
  const ChainComplex chains = lattice.chains();
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> boundaries;
  for (int j = 0; j <= 4; ++j) ranks.push_back(chains.rank(4 - j));
  for (int j = 1; j <= 4; ++j)
    boundaries.push_back(SparseMatrix::from_dense(chains.boundary(5 - j).to_dense().transposed()));
  const HomologyBasis cohomology(ChainComplex(std::move(ranks), std::move(boundaries)));

  // Free H^2 generators: last free_rank generators in cochain degree 2.
  const FgAbGroup& h2 = cohomology.group(2);
  const auto& gens = cohomology.generators(2);
  std::vector<std::vector<Integer>> cocycles;
  for (std::size_t g = h2.torsion.size(); g < gens.size(); ++g)
    cocycles.push_back(to_dense(gens[g], lattice.count(2)));

  const std::size_t r = cocycles.size();
  IntMatrix q(r, r);
  for (std::size_t f = 0; f < t.facets.size(); ++f) {
    const Tuple& s = t.facets[f];
    const std::size_t front = *lattice.find(2, Tuple{s[0], s[1], s[2]});
    const std::size_t back = *lattice.find(2, Tuple{s[2], s[3], s[4]});
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(cocycles[i][front]) == 0) continue;
      for (std::size_t j = 0; j < r; ++j)
        if (sgn(cocycles[j][back]) != 0) q(i, j) += (*eps)[f] * cocycles[i][front] * cocycles[j][back];
    }
  }
  return q;
}

long signature(const IntMatrix& form) {
  if (!form.is_square()) throw ContractError("signature: form is not square");
  const std::size_t n = form.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (form(i, j) != form(j, i)) throw ContractError("signature: form is not symmetric");
      a[i][j] = form(i, j);
    }
  auto swap_index = [&](std::size_t x, std::size_t y) {
    std::swap(a[x], a[y]);
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  // row/col x += row/col y
  auto add_index = [&](std::size_t x, std::size_t y) {
    for (std::size_t k = 0; k < n; ++k) a[x][k] += a[y][k];
    for (std::size_t k = 0; k < n; ++k) a[k][x] += a[k][y];
  };
  long sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t diag = k + 1;
      while (diag < n && sgn(a[diag][diag]) == 0) ++diag;
      if (diag < n) {
        swap_index(k, diag);
      } else {
        std::size_t off = k + 1;
        while (off < n && sgn(a[k][off]) == 0) ++off;
        if (off == n) throw ContractError("signature: form is degenerate");
        add_index(k, off);  // a[k][k] becomes 2 a[k][off]
      }
    }
    const mpq_class pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a[i][k]) == 0) continue;
      const mpq_class f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = k; j < n; ++j) a[j][i] -= f * a[j][k];
    }
    sig += sgn(pivot);
  }
  return sig;
}

}  // namespace scissors
