#pragma once

#include <optional>
#include <vector>

#include "scissors/matrix.hpp"
#include "scissors/triangulation.hpp"

namespace scissors {

/// Cup-product pairing on H^2/tors of a closed oriented 4-dimensional
/// triangulation, via the Alexander-Whitney formula on ordered cochains:
/// Q(a, b) = sum over facets s = (v0..v4) of eps(s) a(v0 v1 v2) b(v2 v3 v4).
/// Uses the given orientation, else the file's, else the propagated one.
IntMatrix intersection_form(const Triangulation& t, const std::optional<std::vector<int>>& orientation = std::nullopt);

/// Positive minus negative diagonal entries after exact rational congruence
/// diagonalization. Throws ContractError for non-symmetric or degenerate forms.
long signature(const IntMatrix& form);

}  // namespace scissors
