#include <gtest/gtest.h>

#include "scissors/cutpaste.hpp"
#include "scissors/errors.hpp"
#include "scissors/fixtures.hpp"
#include "scissors/manifold.hpp"
#include "scissors/triangulation.hpp"

namespace scissors {
namespace {

using fixtures::fixture;

InvariantTuple tuple_of(const std::string& name) { return invariant_tuple(fixture(name)); }

Triangulation two_circles() {
  Triangulation t;
  t.dim = 1;
  t.vertices = 6;
  t.facets = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  return t;
}

TEST(InvariantTuple, Examples) {
  EXPECT_EQ(to_report(tuple_of("s3")), "{dim:3, chi:0, kappa:1, bordism:trivial}");
  const InvariantTuple cp2 = tuple_of("cp2");
  EXPECT_EQ(cp2.chi, 3);
  EXPECT_FALSE(cp2.kappa.has_value());
  EXPECT_EQ(cp2.bordism.kind, Bordism::Kind::computed);
  EXPECT_EQ(std::abs(cp2.bordism.signature), 1);
  EXPECT_EQ(to_report(tuple_of("cp2xs1")), "{dim:5, chi:0, kappa:1, bordism:supplied(0)}");
}

TEST(InvariantTuple, LabelsAndErrors) {
  Triangulation s5 = fixture("s5");
  EXPECT_EQ(invariant_tuple(s5, "w").bordism, Bordism::supplied("w"));
  s5.bordism.reset();
  EXPECT_THROW(invariant_tuple(s5), ContractError);
  EXPECT_THROW(invariant_tuple(fixture("s3"), "0"), ContractError);
  EXPECT_THROW(invariant_tuple(fixtures::rp2()), ContractError);
}

TEST(InvariantTuple, WellFormedness) {
  InvariantTuple t{3, 0, 1, Bordism::trivial()};
  EXPECT_NO_THROW(require_well_formed(t));
  t.chi = 2;
  EXPECT_THROW(require_well_formed(t), ContractError);
  EXPECT_THROW(require_well_formed(InvariantTuple{4, 2, 1, Bordism::computed(0)}), ContractError);
  EXPECT_THROW(require_well_formed(InvariantTuple{4, 2, std::nullopt, Bordism::trivial()}), ContractError);
  EXPECT_THROW(require_well_formed(InvariantTuple{0, 1, std::nullopt, Bordism::trivial()}), ContractError);
}

TEST(SkkEquivalent, Examples) {
  EXPECT_TRUE(skk_equivalent(tuple_of("s5"), tuple_of("cp2xs1")));
  EXPECT_FALSE(skk_equivalent(tuple_of("s5"), tuple_of("t5")));
  EXPECT_TRUE(skk_equivalent(tuple_of("t3"), tuple_of("t3")));
  EXPECT_THROW(skk_equivalent(tuple_of("s3"), tuple_of("s1")), ContractError);
}

TEST(SkEquivalent, Examples) {
  EXPECT_TRUE(sk_equivalent(tuple_of("t3"), tuple_of("s3")));
  EXPECT_FALSE(sk_equivalent(tuple_of("s2xs2"), tuple_of("t4")));
  EXPECT_TRUE(sk_equivalent(tuple_of("t4"), tuple_of("s3xs1")));
  EXPECT_FALSE(sk_equivalent(tuple_of("s4"), tuple_of("t4")));
}

TEST(SkEquivalent, HighDimensionNeedsConvention) {
  EXPECT_THROW(sk_equivalent(tuple_of("s5"), tuple_of("t5")), ContractError);
  const QuotientConvention everything_zero = [](const std::string&) { return std::string("0"); };
  EXPECT_TRUE(sk_equivalent(tuple_of("s5"), tuple_of("t5"), everything_zero));
  const QuotientConvention strict = [](const std::string& label) {
    if (label != "0") throw ContractError("unknown label " + label);
    return label;
  };
  EXPECT_THROW(sk_equivalent(invariant_tuple(fixture("s5"), "w"), tuple_of("t5"), strict), ContractError);
}

TEST(Equivalence, RelationsAreEquivalences) {
  std::vector<InvariantTuple> tuples;
  for (const char* name : {"s4", "t4", "cp2", "s2xs2", "s3xs1"}) tuples.push_back(tuple_of(name));
  InvariantTuple reversed = tuples[2];
  reversed.bordism.signature = -reversed.bordism.signature;
  tuples.push_back(reversed);
  for (const auto& a : tuples) {
    EXPECT_TRUE(skk_equivalent(a, a));
    EXPECT_TRUE(sk_equivalent(a, a));
    for (const auto& b : tuples) {
      EXPECT_EQ(skk_equivalent(a, b), skk_equivalent(b, a));
      EXPECT_EQ(sk_equivalent(a, b), sk_equivalent(b, a));
      // SKK-equivalence refines SK-equivalence.
      if (skk_equivalent(a, b)) EXPECT_TRUE(sk_equivalent(a, b));
      for (const auto& c : tuples) {
        if (skk_equivalent(a, b) && skk_equivalent(b, c)) EXPECT_TRUE(skk_equivalent(a, c));
        if (sk_equivalent(a, b) && sk_equivalent(b, c)) EXPECT_TRUE(sk_equivalent(a, c));
      }
    }
  }
}

TEST(Equivalence, KervaireSeparatesSkkFromSk) {
  // d = 3: same SK class, different semicharacteristic.
  EXPECT_TRUE(sk_equivalent(tuple_of("t3"), tuple_of("s3")));
  EXPECT_FALSE(skk_equivalent(tuple_of("t3"), tuple_of("s3")));
  // d = 1: two circles have kappa = 2 = 0, one circle has kappa = 1.
  const InvariantTuple two = invariant_tuple(two_circles());
  EXPECT_EQ(two.kappa, 0);
  EXPECT_TRUE(sk_equivalent(two, tuple_of("s1")));
  EXPECT_FALSE(skk_equivalent(two, tuple_of("s1")));
}

TEST(Equivalence, MappingToriHaveVanishingEulerCharacteristic) {
  for (const char* name : {"s1", "s3", "t3", "s2xs1"}) {
    const Triangulation t = fixture(name);
    for (const auto& phi : find_automorphisms(t, 4)) {
      const Triangulation torus = mapping_torus(t, phi);
      if (!compute_orientation(torus)) continue;
      const InvariantTuple x = invariant_tuple(torus);
      EXPECT_EQ(x.chi, 0) << name;
      if (x.dim == 4) EXPECT_EQ(x.bordism.signature, 0) << name;
    }
  }
}

TEST(Groups, JTableAndSkkStructure) {
  EXPECT_EQ(j_group(1), (GroupDescription{FgAbGroup(0, {2}), {"[S¹]"}}));
  EXPECT_EQ(j_group(2), (GroupDescription{FgAbGroup(1), {"[S²]"}}));
  EXPECT_EQ(j_group(3), (GroupDescription{FgAbGroup(), {}}));
  EXPECT_EQ(j_group(5).group, FgAbGroup(0, {2}));
  EXPECT_EQ(j_group(7).group, FgAbGroup());
  EXPECT_EQ(skk_group_structure(1).group, FgAbGroup(0, {2}));
  EXPECT_EQ(skk_group_structure(2).group, FgAbGroup(1));
  EXPECT_EQ(skk_group_structure(3).group, FgAbGroup());
  EXPECT_EQ(skk_group_structure(4), (GroupDescription{FgAbGroup(2), {"[S⁴]", "bordism"}}));
}

TEST(Groups, HighDimensionNeedsBordismInput) {
  EXPECT_THROW(skk_group_structure(5), ContractError);
  const GroupDescription omega5{FgAbGroup(0, {2}), {"[Wu]"}};
  EXPECT_EQ(skk_group_structure(5, omega5).group, FgAbGroup(0, {2, 2}));
  EXPECT_EQ(skk_group_structure(6, GroupDescription{FgAbGroup(), {}}).group, FgAbGroup(1));
  EXPECT_THROW(skk_group_structure(0), ContractError);
  EXPECT_THROW(skk_group_structure(5, GroupDescription{FgAbGroup(1), {}}), ContractError);
}

TEST(BoundarySplit, DiskHasOneCircle) {
  const BoundaryClass c = sk_boundary_split(fixtures::disk(2));
  EXPECT_EQ(c.chi, 1);
  EXPECT_EQ(c.word(), "S¹");
  EXPECT_TRUE(c.presentation_level);
}

TEST(BoundarySplit, SolidTorusDiffersFromThickSphere) {
  const BoundaryClass torus = sk_boundary_split(fixture("solid-torus"));
  const BoundaryClass shell = sk_boundary_split(fixture("thick-sphere"));
  EXPECT_EQ(torus.word(), "T²");
  EXPECT_EQ(shell.word(), "S²·S²");
  EXPECT_NE(torus, shell);
}

TEST(BoundarySplit, ClosedManifoldHasEmptyWord) {
  const BoundaryClass c = sk_boundary_split(fixture("s3"));
  EXPECT_EQ(c.word(), "");
  EXPECT_FALSE(c.presentation_level);
  EXPECT_EQ(sk_boundary_split(3, tuple_of("s3"), {}), c);
}

TEST(BoundarySplit, LabelsAreCheckedAgainstFingerprints) {
  EXPECT_THROW(sk_boundary_split(fixture("solid-torus"), std::vector<std::string>{"S^2"}), ContractError);
  EXPECT_EQ(sk_boundary_split(fixture("thick-sphere"), std::vector<std::string>{"S^2", "S²"}).word(), "S²·S²");
  EXPECT_THROW(sk_boundary_split(fixture("thick-sphere"), std::vector<std::string>{"S^2"}), ContractError);
  EXPECT_EQ(label_fingerprint("T²", 2), homology_fingerprint(fixture("t2")));
}

TEST(BoundarySplit, NullbordanceAssertions) {
  const InvariantTuple s5 = tuple_of("s5");
  EXPECT_THROW(sk_boundary_split(5, s5, {"S⁴"}), ContractError);
  EXPECT_EQ(sk_boundary_split(5, s5, {"S⁴"}, {{"S⁴", true}}).word(), "S⁴");
  EXPECT_THROW(sk_boundary_split(5, s5, {"S⁴"}, {{"S⁴", false}}), ContractError);
  EXPECT_THROW(sk_boundary_split(5, s5, {"S⁴"}, {{"S⁴", true}, {"S^4", false}}), ContractError);
  EXPECT_THROW(sk_boundary_split(3, tuple_of("s3"), {"S²"}, {{"S²", false}}), ContractError);
}

}  // namespace
}  // namespace scissors
