#include "scissors/homology.hpp"

#include <string>

#include "reduction.hpp"
#include "scissors/errors.hpp"
#include "scissors/snf.hpp"

namespace scissors {
namespace {

// H_n from the ranks and invariant factors of d_n and d_{n+1}.
std::vector<FgAbGroup> groups_from_factors(const std::vector<std::size_t>& ranks,
                                           const std::vector<std::vector<Integer>>& factors) {
  const std::size_t top = ranks.size() - 1;
  std::vector<FgAbGroup> h(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t rho_n = factors[n].size();
    const std::size_t rho_up = n + 1 <= top ? factors[n + 1].size() : 0;
    h[n].free_rank = ranks[n] - rho_n - rho_up;
    if (n + 1 <= top)
      for (const auto& d : factors[n + 1])
        if (d > 1) h[n].torsion.push_back(d);
  }
  return h;
}

template <class BoundaryFn>
std::vector<FgAbGroup> homology_from(const std::vector<std::size_t>& ranks, BoundaryFn boundary) {
  const std::ptrdiff_t top = static_cast<std::ptrdiff_t>(ranks.size()) - 1;
  std::vector<std::vector<Integer>> factors(ranks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t n = 1; n <= top; ++n)
    factors[n] = smith_normal_form_serial(boundary(static_cast<int>(n)), Transforms::none).invariant_factors();
  return groups_from_factors(ranks, factors);
}

}  // namespace

std::vector<FgAbGroup> homology(const ChainComplex& c) {
  detail::Reduction r(c);
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= c.top_degree(); ++n) ranks.push_back(r.reduced_rank(n));
  return homology_from(ranks, [&](int n) { return r.reduced_boundary(n); });
}

std::vector<FgAbGroup> homology_dense(const ChainComplex& c) {
  return homology_from(c.ranks(), [&](int n) { return c.boundary(n).to_dense(); });
}

HomologyBasis::HomologyBasis(ChainComplex c)
    : complex_(std::move(c)), reduction_(std::make_unique<detail::Reduction>(complex_)) {
  const int top = complex_.top_degree();
  groups_.resize(top + 1);
  degrees_.resize(top + 1);
  const detail::Reduction& red = *reduction_;
#pragma omp parallel for schedule(dynamic, 1)
  for (int n = 0; n <= top; ++n) {
    const std::size_t rn = red.reduced_rank(n);
    SmithForm down = smith_normal_form_serial(red.reduced_boundary(n), Transforms::with_inverses);
    const std::size_t rho = down.rank;
    const std::size_t k = rn - rho;
    IntMatrix kernel_coords = down.V_inv.block(rho, 0, k, rn);  // y -> kernel coordinates
    IntMatrix kernel_basis = down.V.block(0, rho, rn, k);
    IntMatrix images = kernel_coords * red.reduced_boundary(n + 1);
    SmithForm up = smith_normal_form_serial(images, Transforms::with_inverses);

    Degree& deg = degrees_[n];
    deg.coord = up.U * kernel_coords;
    deg.orders.assign(k, 0);
    for (std::size_t t = 0; t < up.rank; ++t) deg.orders[t] = up.S(t, t);
    FgAbGroup g;
    for (std::size_t t = 0; t < k; ++t) {
      if (t >= up.rank) {
        deg.free.push_back(t);
      } else if (deg.orders[t] > 1) {
        deg.torsion.push_back(t);
        g.torsion.push_back(deg.orders[t]);
      }
    }
    g.free_rank = deg.free.size();
    groups_[n] = g;

    IntMatrix gens = kernel_basis * up.U_inv;
    auto add_generator = [&](std::size_t t) {
      std::vector<Integer> column(rn);
      for (std::size_t i = 0; i < rn; ++i) column[i] = gens(i, t);
      deg.generators.push_back(red.lift(n, column));
    };
    for (std::size_t t : deg.torsion) add_generator(t);
    for (std::size_t t : deg.free) add_generator(t);
  }
}

HomologyBasis::~HomologyBasis() = default;
HomologyBasis::HomologyBasis(HomologyBasis&&) noexcept = default;
HomologyBasis& HomologyBasis::operator=(HomologyBasis&&) noexcept = default;

const FgAbGroup& HomologyBasis::group(int n) const {
  if (n < 0 || n > top_degree()) throw ContractError("homology degree " + std::to_string(n) + " out of range");
  return groups_[n];
}

const std::vector<SparseVector>& HomologyBasis::generators(int n) const {
  if (n < 0 || n > top_degree()) throw ContractError("homology degree " + std::to_string(n) + " out of range");
  return degrees_[n].generators;
}

std::vector<Integer> HomologyBasis::coordinates(int n, const SparseVector& z) const {
  if (n < 0 || n > top_degree()) throw ContractError("homology degree " + std::to_string(n) + " out of range");
  if (n >= 1 && !complex_.boundary(n).apply(z).empty())
    throw ContractError("coordinates: chain in degree " + std::to_string(n) + " is not a cycle");
  const Degree& deg = degrees_[n];
  const std::vector<Integer> y = reduction_->project(n, z);
  auto row_value = [&](std::size_t t) {
    Integer acc = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(y[j]) != 0) acc += deg.coord(t, j) * y[j];
    return acc;
  };
  std::vector<Integer> out;
  for (std::size_t t : deg.torsion) {
    Integer v = row_value(t);
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), deg.orders[t].get_mpz_t());
    out.push_back(v);
  }
  for (std::size_t t : deg.free) out.push_back(row_value(t));
  return out;
}

HomologyMap induced_map(const HomologyBasis& src, const HomologyBasis& dst, const ChainMap& f) {
  check_chain_map(src.complex(), dst.complex(), f);
  HomologyMap h;
  for (int n = 0; n <= src.top_degree(); ++n) {
    const FgAbGroup& a = src.group(n);
    const FgAbGroup b = n <= dst.top_degree() ? dst.group(n) : FgAbGroup();
    IntMatrix fr(b.free_rank, a.free_rank);
    IntMatrix tr(b.torsion.size(), a.torsion.size());
    const auto& gens = src.generators(n);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (b.is_trivial()) break;
      const std::vector<Integer> c = dst.coordinates(n, f.components[n].apply(gens[j]));
      if (j < a.torsion.size()) {
        for (std::size_t i = 0; i < b.torsion.size(); ++i) tr(i, j) = c[i];
      } else {
        for (std::size_t i = 0; i < b.free_rank; ++i) fr(i, j - a.torsion.size()) = c[b.torsion.size() + i];
      }
    }
    h.source.push_back(a);
    h.target.push_back(b);
    h.free_part.push_back(std::move(fr));
    h.torsion_part.push_back(std::move(tr));
  }
  return h;
}

HomologyMap induced_map(const ChainComplex& src, const ChainComplex& dst, const ChainMap& f) {
  return induced_map(HomologyBasis(src), HomologyBasis(dst), f);
}

HomologyMap identity_map(const std::vector<FgAbGroup>& groups) {
  HomologyMap h;
  h.source = groups;
  h.target = groups;
  for (const auto& g : groups) {
    h.free_part.push_back(IntMatrix::identity(g.free_rank));
    h.torsion_part.push_back(IntMatrix::identity(g.torsion.size()));
  }
  return h;
}

HomologyMap compose(const HomologyMap& g, const HomologyMap& f) {
  if (f.target != g.source) throw ContractError("compose: homology maps are not composable");
  HomologyMap h;
  h.source = f.source;
  h.target = g.target;
  for (std::size_t n = 0; n < f.free_part.size(); ++n) {
    h.free_part.push_back(g.free_part[n] * f.free_part[n]);
    IntMatrix t = g.torsion_part[n] * f.torsion_part[n];
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j)
        mpz_fdiv_r(t(i, j).get_mpz_t(), t(i, j).get_mpz_t(), g.target[n].torsion[i].get_mpz_t());
    h.torsion_part.push_back(std::move(t));
  }
  return h;
}

Integer free_determinant(const HomologyMap& h, int n) {
  if (n < 0 || n >= static_cast<int>(h.free_part.size()))
    throw ContractError("free_determinant: degree " + std::to_string(n) + " out of range");
  const IntMatrix& m = h.free_part[n];
  if (!m.is_square())
    throw ContractError("free_determinant: free part in degree " + std::to_string(n) + " is " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", not square");
  return determinant(m);
}

}  // namespace scissors
