#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "scissors/errors.hpp"
#include "scissors/homology.hpp"
#include "scissors/squares.hpp"
#include "support.hpp"

namespace scissors {
namespace {

const FgAbGroup Z = FgAbGroup(1);

using testing::relabeled;

std::size_t obj(const SquaresCategory& c, const std::string& id) { return *c.find_object(id); }

/// Grid of an arbitrary element s_w(base) of the grid nerve.
GridSimplex realize(const SquaresCategory& c, const std::vector<std::vector<GridSimplex>>& grids, const Element& e) {
  GridSimplex g = grids[e.base.degree][e.base.id];
  for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) g = grid_degeneracy(c, g, *it);
  return g;
}

/// Nondegenerate grids of the nerve, looked up through their labels.
std::vector<std::vector<GridSimplex>> nerve_grids(const SquaresCategory& c, const SimplicialObject& x, int n_max) {
  std::vector<std::vector<GridSimplex>> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    std::map<std::string, GridSimplex> by_label;
    for (const GridSimplex& g : enumerate_grids(c, n)) by_label.emplace(grid_label(c, g), g);
    for (std::size_t i = 0; i < x.count(n); ++i) out[n].push_back(by_label.at(x.simplex(n, i).label));
  }
  return out;
}

TEST(ValidateSquares, EmptyCategoryIsValid) { EXPECT_TRUE(validate_squares(empty_category()).valid); }

TEST(ValidateSquares, MissingIdentitySquareHasWitness) {
  SquaresCategory c;
  c.add_object("0", true);
  c.add_object("A");
  c.add_hmor("a", "0", "A");
  c.add_vmor("a", "0", "A");
  const SquaresReport r = validate_squares(c);
  EXPECT_FALSE(r.valid);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_NE(r.violations[0].find("identity-bordered square"), std::string::npos) << r.violations[0];
  EXPECT_THROW(k0_presentation(c), ContractError);
}

TEST(ValidateSquares, ToyCategoriesAreValid) {
  for (const auto& c : {finite_sets(3), sizes(3), point_category(), doubling_category()}) {
    const SquaresReport r = validate_squares(c);
    EXPECT_TRUE(r.valid) << (r.violations.empty() ? "" : r.violations[0]);
  }
}

TEST(ValidateSquares, PastingClosureAndInitialObject) {
  SquaresCategory c = point_category();
  c.add_object("B");
  c.add_hmor("b", "0", "B");
  c.add_vmor("b", "0", "B");
  c.add_identity_squares();
  EXPECT_TRUE(validate_squares(c).valid);
  SquaresCategory no_initial;
  no_initial.add_object("X");
  EXPECT_FALSE(validate_squares(no_initial).valid);
}

TEST(ValidateSquares, IdentityLawsAreEnforced) {
  SquaresCategory c = point_category();
  EXPECT_THROW(c.set_hcomp("id(0)", "0>A", "id(A)"), ContractError);
}

TEST(K0, EmptyCategoryIsZero) {
  const K0Presentation p = k0_presentation(empty_category());
  EXPECT_TRUE(p.group.is_trivial());
}

TEST(K0, PointCategoryIsZ) {
  const SquaresCategory c = point_category();
  const K0Presentation p = k0_presentation(c);
  EXPECT_EQ(p.group, Z);
  EXPECT_EQ(p.generators, std::vector<std::string>{"[A]"});
  EXPECT_EQ(p.coordinates(obj(c, "A")), std::vector<Integer>{1});
  EXPECT_EQ(p.coordinates(obj(c, "0")), std::vector<Integer>{0});
}

TEST(K0, DoublingCategory) {
  // Hand computation: [0] = 0 and the square 0 -> A -> B forces [0] + [B] = [A] + [A].
  const SquaresCategory c = doubling_category();
  const K0Presentation p = k0_presentation(c);
  EXPECT_EQ(p.group, Z);
  EXPECT_EQ(p.generators, std::vector<std::string>{"[A]"});
  EXPECT_EQ(p.coordinates(obj(c, "B")), std::vector<Integer>{2});
}

TEST(K0, FiniteSetsCountElements) {
  const SquaresCategory c = finite_sets(3);
  const K0Presentation p = k0_presentation(c);
  EXPECT_EQ(p.group, Z);
  ASSERT_EQ(p.generators.size(), 1u);
  EXPECT_EQ(p.coordinates(obj(c, "{0}")), std::vector<Integer>{1});
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    const std::string& id = c.object(o);
    const long elements = id == "{}" ? 0 : static_cast<long>(std::count(id.begin(), id.end(), ',') + 1);
    EXPECT_EQ(p.coordinates(o), std::vector<Integer>{elements}) << id;
  }
}

TEST(K0, SizesCategoryMatchesFiniteSets) {
  const SquaresCategory c = sizes(3);
  const K0Presentation p = k0_presentation(c);
  EXPECT_EQ(p.group, Z);
  for (long n = 0; n <= 3; ++n) EXPECT_EQ(p.coordinates(obj(c, std::to_string(n))), std::vector<Integer>{n});
}

TEST(K0, RelabelingInvariance) {
  for (const auto& c : {finite_sets(3), sizes(3), point_category(), doubling_category()}) {
    const SquaresCategory r = relabeled(c, "x");
    ASSERT_TRUE(validate_squares(r).valid);
    const K0Presentation a = k0_presentation(c), b = k0_presentation(r);
    EXPECT_EQ(a.group, b.group);
    // The toy groups are all Z or 0, so canonical coordinates agree up to one global sign.
    int sign = 0;
    for (std::size_t o = 0; o < c.object_count(); ++o) {
      const std::vector<Integer>& x = a.coordinates(o);
      const std::vector<Integer>& y = b.coordinates(obj(r, "x" + c.object(o)));
      ASSERT_EQ(x.size(), y.size());
      if (x.empty() || x[0] == 0) {
        EXPECT_EQ(y, x) << c.object(o);
        continue;
      }
      if (sign == 0) sign = x[0] == y[0] ? 1 : -1;
      EXPECT_EQ(y[0], sign * x[0]) << c.object(o);
    }
    // Class-level relations are preserved: compare every pair of objects.
    for (std::size_t o = 0; o < c.object_count(); ++o)
      for (std::size_t q = 0; q < c.object_count(); ++q)
        EXPECT_EQ(a.coordinates(o) == a.coordinates(q),
                  b.coordinates(obj(r, "x" + c.object(o))) == b.coordinates(obj(r, "x" + c.object(q))));
  }
}

TEST(Coequalizer, Examples) {
  const IntMatrix id = IntMatrix::identity(2);
  EXPECT_EQ(coequalizer_pi0(FgAbGroup(2), FgAbGroup(2), id, id), FgAbGroup(2));
  EXPECT_TRUE(coequalizer_pi0(FgAbGroup(2), FgAbGroup(2), id, IntMatrix(2, 2)).is_trivial());
  EXPECT_EQ(coequalizer_pi0(FgAbGroup(1), FgAbGroup(1), IntMatrix{{1}}, IntMatrix{{3}}), FgAbGroup(0, {2}));
  EXPECT_THROW(coequalizer_pi0(FgAbGroup(2), FgAbGroup(1), id, id), ContractError);
}

TEST(Coequalizer, TorsionTargets) {
  // Z/4 modulo the image of (2 - 0) gives Z/2.
  EXPECT_EQ(coequalizer_pi0(FgAbGroup(1), FgAbGroup(0, {4}), IntMatrix{{2}}, IntMatrix{{0}}), FgAbGroup(0, {2}));
}

TEST(GridNerve, EmptyCategoryIsAPoint) {
  const SimplicialObject x = grid_nerve(empty_category(), 3);
  EXPECT_EQ(x.counts(), std::vector<std::size_t>{1});
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(all_elements(x, n).size(), 1u);
}

TEST(GridNerve, PointCategoryIsConnected) {
  const SimplicialObject x = grid_nerve(point_category(), 3);
  EXPECT_EQ(homology(normalized_chains(x))[0], Z);
}

TEST(GridNerve, FiniteSetsCounts) {
  const SimplicialObject x = grid_nerve(finite_sets(3), 2);
  EXPECT_EQ(x.counts(), (std::vector<std::size_t>{8, 56, 96}));
}

TEST(GridNerve, MatchesGridFacesAndDegeneracies) {
  for (const auto& c : {finite_sets(3), sizes(3), doubling_category()}) {
    const int n_max = 3;
    const SimplicialObject x = grid_nerve(c, n_max);
    const auto grids = nerve_grids(c, x, n_max);
    for (int n = 0; n <= n_max; ++n)
      for (const Element& e : all_elements(x, n)) {
        const GridSimplex g = realize(c, grids, e);
        ASSERT_TRUE(is_grid(c, g));
        for (int i = 0; n > 0 && i <= n; ++i) EXPECT_EQ(realize(c, grids, x.face(e, i)), grid_face(c, g, i));
        if (n < n_max)
          for (int i = 0; i <= n; ++i) EXPECT_EQ(realize(c, grids, x.degeneracy(e, i)), grid_degeneracy(c, g, i));
      }
  }
}

TEST(GridNerve, BudgetIsEnforced) {
  EXPECT_THROW(enumerate_grids(finite_sets(3), 3, 10), ResourceError);
  EXPECT_THROW(grid_nerve(finite_sets(3), 3, 50), ResourceError);
}

TEST(StringToGrid, SinglePiece) {
  const SquaresCategory c = finite_sets(3);
  const GridSimplex g = string_to_grid(c, {obj(c, "{1}")});
  EXPECT_EQ(g.n, 0);
  EXPECT_EQ(g.objects, std::vector<std::size_t>{obj(c, "{1}")});
}

TEST(StringToGrid, OneByOneSquare) {
  const SquaresCategory c = finite_sets(3);
  const GridSimplex g = string_to_grid(c, {obj(c, "{0}"), obj(c, "{1}"), obj(c, "{2}")});
  ASSERT_EQ(g.n, 1);
  EXPECT_EQ(g.object(0, 0), obj(c, "{1}"));
  EXPECT_EQ(g.object(0, 1), obj(c, "{1,2}"));
  EXPECT_EQ(g.object(1, 0), obj(c, "{0,1}"));
  EXPECT_EQ(g.object(1, 1), obj(c, "{0,1,2}"));
  EXPECT_TRUE(is_grid(c, g));
}

TEST(StringToGrid, MissingUnionIsContractError) {
  const SquaresCategory c = finite_sets(3);
  EXPECT_THROW(string_to_grid(c, {obj(c, "{0}"), obj(c, "{0}"), obj(c, "{2}")}), ContractError);
  EXPECT_THROW(string_to_grid(c, {obj(c, "{0}"), obj(c, "{1}")}), ContractError);
}

TEST(StringToGrid, CommutesWithSubdivisionFaces) {
  for (const auto& c : {finite_sets(3), sizes(3)})
    for (int m = 1; m <= 3; ++m)
      for (const auto& s : composable_strings(c, m)) {
        const GridSimplex g = string_to_grid(c, s);
        for (int i = 0; i <= m; ++i) EXPECT_EQ(grid_face(c, g, i), string_to_grid(c, string_sd_face(c, s, i)));
      }
}

TEST(StringToGrid, StringCounts) {
  // Ordered disjoint families of 2m+1 subsets of a 3-set: 2m+1 choices per element.
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(composable_strings(finite_sets(3), m).size(), static_cast<std::size_t>(std::pow(2 * m + 2, 3)));
}

TEST(SquaresText, RoundTripAndErrors) {
  for (const auto& c : {finite_sets(3), doubling_category(), sizes(2)}) {
    const std::string text = to_text(c);
    EXPECT_EQ(to_text(parse_squares(text)), text);
  }
  try {
    parse_squares("object 0 initial\nhmor f 0 B\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  const SquaresCategory d = parse_squares("object 0 initial\nobject A\nhmor a 0 A\nvmor a 0 A\nidentity-squares\n");
  EXPECT_TRUE(validate_squares(d).valid);
  EXPECT_EQ(k0_presentation(d).group, FgAbGroup(1));
}

}  // namespace
}  // namespace scissors
