#include "scissors/snf.hpp"

#include <cstddef>
#include <limits>

namespace scissors {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Position {
  std::size_t row = kNone;
  std::size_t col = kNone;
};

// Lexicographic (|value|, row, col) comparison; kNone positions lose.
bool better_pivot(const IntMatrix& a, Position x, Position y) {
  if (y.row == kNone) return x.row != kNone;
  if (x.row == kNone) return false;
  int c = mpz_cmpabs(a(x.row, x.col).get_mpz_t(), a(y.row, y.col).get_mpz_t());
  if (c != 0) return c < 0;
  if (x.row != y.row) return x.row < y.row;
  return x.col < y.col;
}

bool earlier(Position x, Position y) {
  if (y.row == kNone) return x.row != kNone;
  if (x.row == kNone) return false;
  return x.row != y.row ? x.row < y.row : x.col < y.col;
}

template <bool Parallel>
class SmithEngine {
public:
  SmithEngine(const IntMatrix& m, Transforms t) : a_(m), t_(t) {
    if (t_ != Transforms::none) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
    }
    if (t_ == Transforms::with_inverses) {
      u_inv_ = IntMatrix::identity(m.rows());
      v_inv_ = IntMatrix::identity(m.cols());
    }
  }

  SmithForm run() {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
      Position p = find_pivot(t);
      if (p.row == kNone) break;
      move_to_diagonal(p, t);
      bool clean = eliminate_column(t);
      clean = eliminate_row(t) && clean;
      if (!clean) continue;
      Position bad = first_non_multiple(t);
      if (bad.row != kNone) {
        add_row(t, bad.row, Integer(1));
        continue;
      }
      if (sgn(a_(t, t)) < 0) negate_row(t);
      ++t;
    }
    SmithForm out;
    out.rank = t;
    out.S = std::move(a_);
    out.U = std::move(u_);
    out.V = std::move(v_);
    out.U_inv = std::move(u_inv_);
    out.V_inv = std::move(v_inv_);
    return out;
  }

private:
  Position find_pivot(std::size_t t) const {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    Position best;
    if constexpr (Parallel) {
#pragma omp parallel
      {
        Position local;
#pragma omp for schedule(static) nowait
        for (std::size_t i = t; i < rows; ++i)
          for (std::size_t j = t; j < cols; ++j)
            if (sgn(a_(i, j)) != 0 && better_pivot(a_, {i, j}, local)) local = {i, j};
#pragma omp critical
        if (better_pivot(a_, local, best)) best = local;
      }
    } else {
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a_(i, j)) != 0 && better_pivot(a_, {i, j}, best)) best = {i, j};
    }
    return best;
  }

  Position first_non_multiple(std::size_t t) const {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    const Integer& d = a_(t, t);
    Position first;
    if constexpr (Parallel) {
#pragma omp parallel
      {
        Position local;
#pragma omp for schedule(static) nowait
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (local.row != kNone) continue;
          for (std::size_t j = t + 1; j < cols; ++j)
            if (!mpz_divisible_p(a_(i, j).get_mpz_t(), d.get_mpz_t())) {
              local = {i, j};
              break;
            }
        }
#pragma omp critical
        if (earlier(local, first)) first = local;
      }
    } else {
      for (std::size_t i = t + 1; i < rows && first.row == kNone; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a_(i, j).get_mpz_t(), d.get_mpz_t())) {
            first = {i, j};
            break;
          }
    }
    return first;
  }

  void move_to_diagonal(Position p, std::size_t t) {
    if (p.row != t) {
      a_.swap_rows(p.row, t);
      if (t_ != Transforms::none) u_.swap_rows(p.row, t);
      if (t_ == Transforms::with_inverses) u_inv_.swap_cols(p.row, t);
    }
    if (p.col != t) {
      a_.swap_cols(p.col, t);
      if (t_ != Transforms::none) v_.swap_cols(p.col, t);
      if (t_ == Transforms::with_inverses) v_inv_.swap_rows(p.col, t);
    }
  }

  // row[i] -= q_i * row[t] for every i > t; returns true when column t is clear.
  bool eliminate_column(std::size_t t) {
    const std::size_t rows = a_.rows();
    std::vector<Integer> q(rows);
    const Integer& pivot = a_(t, t);
    for (std::size_t i = t + 1; i < rows; ++i)
      if (sgn(a_(i, t)) != 0) mpz_fdiv_q(q[i].get_mpz_t(), a_(i, t).get_mpz_t(), pivot.get_mpz_t());

    const bool track = t_ != Transforms::none;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 8) if (Parallel)
    for (std::ptrdiff_t si = static_cast<std::ptrdiff_t>(t) + 1; si < n; ++si) {
      const auto i = static_cast<std::size_t>(si);
      if (sgn(q[i]) == 0) continue;
      Integer neg = -q[i];
      a_.add_row_multiple(i, t, neg);
      if (track) u_.add_row_multiple(i, t, neg);
    }
    if (t_ == Transforms::with_inverses) {
      // U_inv: col[t] += q_i * col[i]
      const std::ptrdiff_t nr = static_cast<std::ptrdiff_t>(u_inv_.rows());
#pragma omp parallel for schedule(static) if (Parallel)
      for (std::ptrdiff_t sr = 0; sr < nr; ++sr) {
        const auto r = static_cast<std::size_t>(sr);
        Integer acc = u_inv_(r, t);
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(q[i]) != 0 && sgn(u_inv_(r, i)) != 0) acc += q[i] * u_inv_(r, i);
        u_inv_(r, t) = acc;
      }
    }
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (sgn(a_(i, t)) != 0) clean = false;
    return clean;
  }

  // col[j] -= q_j * col[t] for every j > t; returns true when row t is clear.
  bool eliminate_row(std::size_t t) {
    const std::size_t cols = a_.cols();
    std::vector<Integer> q(cols);
    const Integer& pivot = a_(t, t);
    for (std::size_t j = t + 1; j < cols; ++j)
      if (sgn(a_(t, j)) != 0) mpz_fdiv_q(q[j].get_mpz_t(), a_(t, j).get_mpz_t(), pivot.get_mpz_t());

    const bool track = t_ != Transforms::none;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cols);
#pragma omp parallel for schedule(dynamic, 8) if (Parallel)
    for (std::ptrdiff_t sj = static_cast<std::ptrdiff_t>(t) + 1; sj < n; ++sj) {
      const auto j = static_cast<std::size_t>(sj);
      if (sgn(q[j]) == 0) continue;
      Integer neg = -q[j];
      a_.add_col_multiple(j, t, neg);
      if (track) v_.add_col_multiple(j, t, neg);
    }
    if (t_ == Transforms::with_inverses) {
      // V_inv: row[t] += q_j * row[j]
      const std::ptrdiff_t nc = static_cast<std::ptrdiff_t>(v_inv_.cols());
#pragma omp parallel for schedule(static) if (Parallel)
      for (std::ptrdiff_t sc = 0; sc < nc; ++sc) {
        const auto c = static_cast<std::size_t>(sc);
        Integer acc = v_inv_(t, c);
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(q[j]) != 0 && sgn(v_inv_(j, c)) != 0) acc += q[j] * v_inv_(j, c);
        v_inv_(t, c) = acc;
      }
    }
    bool clean = true;
    for (std::size_t j = t + 1; j < cols; ++j)
      if (sgn(a_(t, j)) != 0) clean = false;
    return clean;
  }

  // row[target] += f * row[source]
  void add_row(std::size_t target, std::size_t source, const Integer& f) {
    a_.add_row_multiple(target, source, f);
    if (t_ != Transforms::none) u_.add_row_multiple(target, source, f);
    if (t_ == Transforms::with_inverses) u_inv_.add_col_multiple(source, target, -f);
  }

  void negate_row(std::size_t r) {
    a_.negate_row(r);
    if (t_ != Transforms::none) u_.negate_row(r);
    if (t_ == Transforms::with_inverses) u_inv_.negate_col(r);
  }

  IntMatrix a_;
  Transforms t_;
  IntMatrix u_, v_, u_inv_, v_inv_;
};

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> d;
  d.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m, Transforms t) {
  return SmithEngine<true>(m, t).run();
}

SmithForm smith_normal_form_serial(const IntMatrix& m, Transforms t) {
  return SmithEngine<false>(m, t).run();
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  return smith_normal_form(m, Transforms::none).invariant_factors();
}

}  // namespace scissors
