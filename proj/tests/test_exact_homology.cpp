#include <gtest/gtest.h>

#include <random>

#include "scissors/chain_complex.hpp"
#include "scissors/errors.hpp"
#include "scissors/fg_group.hpp"
#include "scissors/fixtures.hpp"
#include "scissors/forms.hpp"
#include "scissors/homology.hpp"
#include "scissors/matrix.hpp"
#include "scissors/snf.hpp"
#include "scissors/triangulation.hpp"

namespace scissors {
namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_smith_diagonal(const IntMatrix& s, std::size_t rank) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) {
    if (i < rank && s(i, i) <= 0) return false;
    if (i >= rank && s(i, i) != 0) return false;
    if (i + 1 < rank && s(i + 1, i + 1) % s(i, i) != 0) return false;
  }
  return true;
}

TEST(SmithNormalForm, Diag2And3BecomesDiag1And6) {
  // Frozen from sympy smith_normal_form([[2,0],[0,3]]).
  const SmithForm f = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(f.S, (IntMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ(f.U * (IntMatrix{{2, 0}, {0, 3}}) * f.V, f.S);
}

TEST(SmithNormalForm, ZeroMatrixKeepsIdentityTransforms) {
  const SmithForm f = smith_normal_form(IntMatrix(3, 2));
  EXPECT_TRUE(f.S.is_zero());
  EXPECT_EQ(f.U, IntMatrix::identity(3));
  EXPECT_EQ(f.V, IntMatrix::identity(2));
  EXPECT_EQ(f.rank, 0u);
}

TEST(SmithNormalForm, IdentityIsFixed) {
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(4)).S, IntMatrix::identity(4));
}

TEST(SmithNormalForm, RandomMatricesSatisfyUMVEqualsS) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = random_matrix(rng, 1 + trial % 7, 1 + (trial * 3) % 8, -9, 9);
    const SmithForm f = smith_normal_form(m, Transforms::with_inverses);
    EXPECT_EQ(f.U * m * f.V, f.S);
    EXPECT_TRUE(is_smith_diagonal(f.S, f.rank));
    EXPECT_EQ(f.U * f.U_inv, IntMatrix::identity(m.rows()));
    EXPECT_EQ(f.V * f.V_inv, IntMatrix::identity(m.cols()));
    EXPECT_EQ(abs(determinant(f.U)), 1);
    EXPECT_EQ(abs(determinant(f.V)), 1);
  }
}

TEST(SmithNormalForm, ParallelMatchesSerialReference) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix m = random_matrix(rng, 30, 25, -3, 3);
    const SmithForm a = smith_normal_form(m, Transforms::with_inverses);
    const SmithForm b = smith_normal_form_serial(m, Transforms::with_inverses);
    EXPECT_EQ(a.S, b.S);
    EXPECT_EQ(a.U, b.U);
    EXPECT_EQ(a.V, b.V);
    EXPECT_EQ(a.U_inv, b.U_inv);
    EXPECT_EQ(a.V_inv, b.V_inv);
  }
}

TEST(SmithNormalForm, HandlesEntriesBeyondMachineWords) {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = Integer("123456789012345678901234567890");
  m(1, 1) = Integer("987654321098765432109876543210");
  const auto d = invariant_factors(m);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0] * d[1], m(0, 0) * m(1, 1));
  EXPECT_EQ(d[1] % d[0], 0);
}

TEST(Determinant, EmptyMatrixIsOne) { EXPECT_EQ(determinant(IntMatrix()), 1); }

TEST(FgAbGroup, CanonicalFormAndPrinting) {
  const FgAbGroup g = FgAbGroup::from_relations(IntMatrix{{2, 0}, {0, 3}}, 2);
  EXPECT_EQ(g, FgAbGroup(0, {6}));
  EXPECT_EQ(to_string(FgAbGroup(2, {2, 4})), "Z^2 + Z/2 + Z/4");
  EXPECT_EQ(to_string(FgAbGroup()), "0");
  EXPECT_EQ(to_string(FgAbGroup(1)), "Z");
}

TEST(ChainComplex, RejectsNonzeroSquare) {
  EXPECT_THROW(ChainComplex::from_dense({IntMatrix{{1}}, IntMatrix{{1}}}), StructuralError);
}

TEST(ChainComplex, SparseMultiplyMatchesSerial) {
  std::mt19937 rng(3);
  const SparseMatrix a = SparseMatrix::from_dense(random_matrix(rng, 40, 30, -1, 1));
  const SparseMatrix b = SparseMatrix::from_dense(random_matrix(rng, 30, 50, -1, 1));
  EXPECT_EQ(multiply(a, b), multiply_serial(a, b));
  EXPECT_EQ(multiply(a, b).to_dense(), a.to_dense() * b.to_dense());
}

TEST(Homology, BoundaryOfFourSimplexIsThreeSphere) {
  const auto h = homology(FaceLattice(fixtures::sphere(3)).chains());
  EXPECT_EQ(h, (std::vector<FgAbGroup>{FgAbGroup(1), FgAbGroup(), FgAbGroup(), FgAbGroup(1)}));
}

TEST(Homology, PointIsZInDegreeZero) {
  const ChainComplex c({1}, {});
  EXPECT_EQ(homology(c), std::vector<FgAbGroup>{FgAbGroup(1)});
}

TEST(Homology, ProjectivePlaneHasTwoTorsion) {
  const auto h = homology(FaceLattice(fixtures::rp2()).chains());
  EXPECT_EQ(h, (std::vector<FgAbGroup>{FgAbGroup(1), FgAbGroup(0, {2}), FgAbGroup()}));
}

// Betti numbers frozen from tests/oracles/homology_oracle.py (numpy ranks over Q and GF(2)).
TEST(Homology, FixturesMatchOracleBettiNumbers) {
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> expected = {
      {"s1", {1, 1}},       {"s2", {1, 0, 1}},       {"s4", {1, 0, 0, 0, 1}},     {"t2", {1, 2, 1}},
      {"t3", {1, 3, 3, 1}}, {"t4", {1, 4, 6, 4, 1}}, {"cp2", {1, 0, 1, 0, 1}},    {"s2xs2", {1, 0, 2, 0, 1}},
      {"s3xs1", {1, 1, 0, 1, 1}}};
  for (const auto& [name, betti] : expected) {
    const auto h = homology(FaceLattice(fixtures::fixture(name)).chains());
    ASSERT_EQ(h.size(), betti.size()) << name;
    for (std::size_t n = 0; n < h.size(); ++n) {
      EXPECT_EQ(h[n].free_rank, betti[n]) << name << " H" << n;
      EXPECT_TRUE(h[n].torsion.empty()) << name << " H" << n;
    }
  }
}

TEST(Homology, ReducedRouteMatchesDenseRoute) {
  for (const char* name : {"s3", "t3", "rp2", "cp2", "s2xs1"}) {
    const ChainComplex c = FaceLattice(fixtures::fixture(name)).chains();
    EXPECT_EQ(homology(c), homology_dense(c)) << name;
  }
}

TEST(Homology, EulerCharacteristicOfChainsMatchesBetti) {
  for (const char* name : {"s2", "t3", "rp2", "cp2", "s2xs2"}) {
    const ChainComplex c = FaceLattice(fixtures::fixture(name)).chains();
    long alt = 0;
    const auto h = homology(c);
    for (std::size_t n = 0; n < h.size(); ++n) alt += (n % 2 ? -1 : 1) * static_cast<long>(h[n].free_rank);
    EXPECT_EQ(alt, c.euler_characteristic()) << name;
  }
}

TEST(Homology, TorsionCoordinatesAreReduced) {
  const HomologyBasis basis(FaceLattice(fixtures::rp2()).chains());
  ASSERT_EQ(basis.generators(1).size(), 1u);
  SparseVector twice;
  axpy(twice, 3, basis.generators(1)[0]);
  EXPECT_EQ(basis.coordinates(1, twice), std::vector<Integer>{1});
}

/// Circle with one vertex and one edge: d = 0.
ChainComplex simplicial_circle() { return ChainComplex::from_dense({IntMatrix(1, 1)}); }

TEST(InducedMap, IdentityChainMapGivesIdentity) {
  const ChainComplex c = FaceLattice(fixtures::fixture("t3")).chains();
  EXPECT_EQ(induced_map(c, c, identity_map(c)), identity_map(homology(c)));
}

TEST(InducedMap, EdgeNegationOnCircle) {
  const ChainComplex c = simplicial_circle();
  ChainMap f;
  f.components = {SparseMatrix::from_dense(IntMatrix{{1}}), SparseMatrix::from_dense(IntMatrix{{-1}})};
  const HomologyMap h = induced_map(c, c, f);
  EXPECT_EQ(h.free_part[1], IntMatrix{{-1}});
  EXPECT_EQ(free_determinant(h, 1), -1);
  EXPECT_EQ(free_determinant(h, 0), 1);
}

TEST(InducedMap, NonCommutingSquareIsStructural) {
  const ChainComplex c = ChainComplex::from_dense({IntMatrix{{1}, {-1}}});  // interval: 2 vertices, 1 edge
  ChainMap f;
  f.components = {SparseMatrix::from_dense(IntMatrix{{1, 0}, {0, 1}}), SparseMatrix::from_dense(IntMatrix{{-1}})};
  EXPECT_THROW(induced_map(c, c, f), StructuralError);
}

TEST(InducedMap, Functoriality) {
  const ChainComplex c = simplicial_circle();
  ChainMap neg;
  neg.components = {SparseMatrix::from_dense(IntMatrix{{1}}), SparseMatrix::from_dense(IntMatrix{{-1}})};
  const HomologyMap h = induced_map(c, c, neg);
  EXPECT_EQ(compose(h, h), induced_map(c, c, compose(neg, neg)));
  EXPECT_EQ(compose(h, h), identity_map(homology(c)));
}

TEST(FreeDeterminant, IdentityOnZ3AndEmptyRank) {
  const HomologyMap id = identity_map(std::vector<FgAbGroup>{FgAbGroup(3), FgAbGroup(0, {2})});
  EXPECT_EQ(free_determinant(id, 0), 1);
  EXPECT_EQ(free_determinant(id, 1), 1);
}

TEST(FreeDeterminant, NonSquareIsContractError) {
  HomologyMap h;
  h.source = {FgAbGroup(2)};
  h.target = {FgAbGroup(1)};
  h.free_part = {IntMatrix(1, 2)};
  h.torsion_part = {IntMatrix()};
  EXPECT_THROW(free_determinant(h, 0), ContractError);
}

TEST(Signature, SmallForms) {
  EXPECT_EQ(signature(IntMatrix()), 0);
  EXPECT_EQ(signature(IntMatrix{{1}}), 1);
  EXPECT_EQ(signature(IntMatrix{{-1}}), -1);
  EXPECT_EQ(signature(IntMatrix{{0, 1}, {1, 0}}), 0);
  EXPECT_EQ(signature(IntMatrix{{2, 1}, {1, 2}}), 2);
  EXPECT_THROW(signature(IntMatrix{{0, 0}, {0, 1}}), ContractError);
  EXPECT_THROW(signature(IntMatrix{{0, 1}, {2, 0}}), ContractError);
}

TEST(IntersectionForm, FourSphereIsEmpty) {
  const IntMatrix q = intersection_form(fixtures::fixture("s4"));
  EXPECT_EQ(q.rows(), 0u);
  EXPECT_EQ(q.cols(), 0u);
}

TEST(IntersectionForm, ProjectivePlaneIsUnimodularAndFlips) {
  const Triangulation t = fixtures::fixture("cp2");
  const IntMatrix q = intersection_form(t);
  ASSERT_EQ(q.rows(), 1u);
  EXPECT_EQ(abs(q(0, 0)), 1);
  std::vector<int> reversed = *t.orientation;
  for (int& s : reversed) s = -s;
  EXPECT_EQ(intersection_form(t, reversed), -q);
  EXPECT_EQ(signature(intersection_form(t, reversed)), -signature(q));
}

TEST(IntersectionForm, SphereProductIsHyperbolic) {
  const IntMatrix q = intersection_form(fixtures::fixture("s2xs2"));
  ASSERT_EQ(q.rows(), 2u);
  EXPECT_EQ(abs(determinant(q)), 1);
  EXPECT_EQ(signature(q), 0);
  // Even form: the hyperbolic plane, not diag(1, -1).
  EXPECT_EQ(q(0, 0) % 2, 0);
  EXPECT_EQ(q(1, 1) % 2, 0);
}

TEST(IntersectionForm, ContractErrors) {
  EXPECT_THROW(intersection_form(fixtures::fixture("s3")), ContractError);
  Triangulation rp2 = fixtures::rp2();
  EXPECT_THROW(intersection_form(rp2), ContractError);
}

TEST(Signature, FormPlusNegativeFormVanishes) {
  const IntMatrix q = intersection_form(fixtures::fixture("cp2"));
  EXPECT_EQ(signature(direct_sum(q, -q)), 0);
  EXPECT_EQ(signature(direct_sum(q, q)), 2 * signature(q));
}

TEST(MatrixText, RoundTrip) {
  const IntMatrix m{{1, -2, 3}, {0, 5, -6}};
  EXPECT_EQ(parse_matrix(to_text(m)), m);
  EXPECT_THROW(parse_matrix("matrix 2 2\n1 2 3\n"), ParseError);
}

}  // namespace
}  // namespace scissors
