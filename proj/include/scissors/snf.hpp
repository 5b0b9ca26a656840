#pragma once

#include <vector>

#include "scissors/matrix.hpp"

namespace scissors {

enum class Transforms {
  none,           ///< only S is computed
  forward,        ///< U and V
  with_inverses,  ///< U, V, U^-1 and V^-1
};

/// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ... , all d_i >= 0.
struct SmithForm {
  IntMatrix S;
  IntMatrix U, V;
  IntMatrix U_inv, V_inv;
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<Integer> invariant_factors() const;
};

/// Smith normal form. Pivot: smallest nonzero |entry| in the active submatrix,
/// ties to the lowest (row, col). Row and column sweeps run under OpenMP; the
/// result is bit-identical to smith_normal_form_serial.
SmithForm smith_normal_form(const IntMatrix& m, Transforms t = Transforms::forward);

/// Single-threaded reference kept for testing and benchmarking.
SmithForm smith_normal_form_serial(const IntMatrix& m, Transforms t = Transforms::forward);

std::vector<Integer> invariant_factors(const IntMatrix& m);

}  // namespace scissors
