#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "scissors/fixtures.hpp"
#include "scissors/triangulation.hpp"

namespace scissors {
namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
protected:
  static void SetUpTestSuite() {
    dir_ = std::filesystem::temp_directory_path() / ("scissors_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  static void TearDownTestSuite() { std::filesystem::remove_all(dir_); }

  /// Writes `fixture name` output to a file and returns its path.
  static std::string fixture_file(const std::string& name) {
    const std::string path = (dir_ / (name + ".tri")).string();
    if (!std::filesystem::exists(path)) {
      const Result r = run({"fixture", name});
      EXPECT_EQ(r.code, 0) << r.err;
      std::ofstream(path) << r.out;
    }
    return path;
  }

  static std::string write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  static std::filesystem::path dir_;
};

std::filesystem::path Cli::dir_;

TEST_F(Cli, InvariantsOfThreeSphere) {
  const Result r = run({"invariants", fixture_file("s3")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{dim:3, chi:0, kappa:1, bordism:trivial}\n");
}

TEST_F(Cli, SkkEquivalenceOfSphereAndProjectiveProduct) {
  const Result r = run({"equiv", "--rel", "skk", fixture_file("s5"), fixture_file("cp2xs1")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{dim:5, chi:[0,0], kappa:[1,1], bordism:[supplied(0),supplied(0)], verdict:true}\n");
  const Result t = run({"equiv", "--rel", "skk", fixture_file("s5"), fixture_file("t5")});
  EXPECT_NE(t.out.find("verdict:false"), std::string::npos);
}

TEST_F(Cli, SkEquivalenceInDimensionFour) {
  const Result r = run({"equiv", "--rel", "sk", fixture_file("t4"), fixture_file("s3xs1")});
  EXPECT_EQ(r.out, "{dim:4, chi:[0,0], bordism:[computed(0),computed(0)], verdict:true}\n");
  EXPECT_NE(run({"equiv", "--rel", "sk", fixture_file("s2xs2"), fixture_file("t4")}).out.find("verdict:false"), std::string::npos);
}

TEST_F(Cli, BordismLabels) {
  const Result r = run({"invariants", fixture_file("s5"), "--bordism", "w"});
  EXPECT_EQ(r.out, "{dim:5, chi:0, kappa:1, bordism:supplied(w)}\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  const std::string bare = write("s5bare.tri", to_text([] {
                                   Triangulation t = fixtures::fixture("s5");
                                   t.bordism.reset();
                                   return t;
                                 }()));
  const Result missing = run({"invariants", bare});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.err, "error: contract: dimension 5 needs a bordism label\n");
}

TEST_F(Cli, K1OfVertexTransposition) {
  const Result r = run({"k1", fixture_file("s3"), "--perm", "1 0 2 3 4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "-1\n");
}

TEST_F(Cli, InlinePermutationWinsOverFile) {
  Triangulation t = fixtures::fixture("s3");
  t.perm = VertexMap{1, 0, 2, 3, 4};
  const std::string path = write("s3perm.tri", to_text(t));
  EXPECT_EQ(run({"k1", path}).out, "-1\n");
  const Result r = run({"k1", path, "--perm", "0 1 2 3 4"});
  EXPECT_EQ(r.out, "1\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(run({"k1", fixture_file("s3")}).code, 1);
}

TEST_F(Cli, FixtureListingAndCounts) {
  EXPECT_EQ(run({"fixture", "s3"}).out, to_text(fixtures::fixture("s3")));
  const Triangulation t3 = parse_triangulation(run({"fixture", "t3"}).out);
  EXPECT_EQ(t3.facets.size(), 48u);
  const Triangulation cp2 = parse_triangulation(run({"fixture", "cp2"}).out);
  EXPECT_EQ(cp2.vertices, 9u);
  EXPECT_EQ(cp2.facets.size(), 36u);
  const Result unknown = run({"fixture", "klein"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_EQ(unknown.err.rfind("error: contract:", 0), 0u);
  std::istringstream names(run({"fixture", "--list"}).out);
  std::set<std::string> listed;
  for (std::string n; names >> n;) listed.insert(n);
  EXPECT_EQ(listed.size(), fixtures::fixture_names().size());
}

TEST_F(Cli, EveryFixtureValidatesAndRoundTripsByteExactly) {
  for (const std::string& name : fixtures::fixture_names()) {
    const Result a = run({"fixture", name});
    const Result b = run({"fixture", name});
    EXPECT_EQ(a.out, b.out) << name;
    EXPECT_EQ(to_text(parse_triangulation(a.out)), a.out) << name;
    const Triangulation t = parse_triangulation(a.out);
    const bool closed = validate(t).valid;
    const Result v = closed ? run({"validate", "-"}, a.out) : run({"validate", "--allow-boundary", "-"}, a.out);
    EXPECT_EQ(v.code, 0) << name << "\n" << v.out;
    EXPECT_EQ(v.out.rfind("valid: true\n", 0), 0u) << name;
  }
}

TEST_F(Cli, ValidateReportsWitnesses) {
  const Result r = run({"validate", "-"}, "dim 2\nvertices 5\nfacet 0 1 2\nfacet 0 1 3\nfacet 0 1 4\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("problem: face (0 1) lies in 3 facets"), std::string::npos) << r.out;
  const Result rp2 = run({"validate", fixture_file("rp2")});
  EXPECT_EQ(rp2.out, "valid: true\nconnected: true\norientable: false\nchi: 1\n");
}

TEST_F(Cli, HomologyReport) {
  EXPECT_EQ(run({"homology", fixture_file("rp2")}).out, "H0: Z\nH1: Z/2\nH2: 0\n");
  EXPECT_EQ(run({"homology", "-"}, "kind semisimplicial\nsimplex 0 v\nsimplex 1 e\nface e 0 v\nface e 1 v\n").out,
            "H0: Z\nH1: Z\n");
}

TEST_F(Cli, SubdivideSemisimplicialTwoSimplex) {
  const std::string delta2 =
      "kind semisimplicial\nsimplex 0 a\nsimplex 0 b\nsimplex 0 c\nsimplex 1 ab\nsimplex 1 ac\nsimplex 1 bc\n"
      "simplex 2 abc\nface ab 0 b\nface ab 1 a\nface ac 0 c\nface ac 1 a\nface bc 0 c\nface bc 1 b\n"
      "face abc 0 bc\nface abc 1 ac\nface abc 2 ab\n";
  const Result r = run({"subdivide", "-"}, delta2);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"homology", "-"}, r.out).out, "H0: Z^3\n");
  EXPECT_EQ(run({"validate", "-"}, r.out).out, "valid: true\ncounts: 3\n");
}

TEST_F(Cli, TorusOfCircleReflection) {
  const std::string path = write("s1.tri", "dim 1\nvertices 3\nfacet 0 1\nfacet 0 2\nfacet 1 2\n");
  const Result r = run({"torus", path, "--perm", "0 2 1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"homology", "-"}, r.out).out, "H0: Z\nH1: Z + Z/2\nH2: 0\n");
  EXPECT_EQ(run({"torus", path, "--perm", "1 0 2", "--no-subdivide"}).code, 1);
}

TEST_F(Cli, SquaresCommands) {
  const std::string doubling =
      "object 0 initial\nobject A\nobject B\nhmor a 0 A\nhmor ab A B\nhmor b 0 B\nvmor a 0 A\nvmor ab A B\n"
      "vmor b 0 B\nhcomp a ab b\nvcomp a ab b\nidentity-squares\nsquare a a ab ab\n";
  EXPECT_EQ(run({"validate", "-"}, doubling).out, "valid: true\n");
  EXPECT_EQ(run({"k0", "-"}, doubling).out, "K0: Z\ngenerators: [A]\n[0] = 0\n[A] = [A]\n[B] = 2[A]\n");
  const Result g = run({"grid", "-", "--nmax", "2"}, "object 0 initial\nobject A\nhmor a 0 A\nvmor a 0 A\nidentity-squares\n");
  EXPECT_EQ(g.code, 0) << g.err;
  EXPECT_NE(g.out.find("identities: ok\nH0: Z\n"), std::string::npos) << g.out;
  EXPECT_EQ(run({"grid", "-", "--budget", "3"}, doubling).code, 1);
  const Result broken = run({"k0", "-"}, "object 0 initial\nobject A\nhmor a 0 A\nvmor a 0 A\n");
  EXPECT_EQ(broken.code, 1);
  EXPECT_NE(broken.err.find("identity-bordered square"), std::string::npos);
}

TEST_F(Cli, SnfCommand) {
  EXPECT_EQ(run({"snf", "-"}, "matrix 2 2\n2 0\n0 3\n").out, "rank: 2\ninvariant factors: 1 6\n");
}

TEST_F(Cli, ExitCodes) {
  const Result none = run({});
  EXPECT_EQ(none.code, 2);
  EXPECT_EQ(none.err.rfind("error: usage:", 0), 0u);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"invariants", fixture_file("s3"), "--wobble"}).code, 2);
  EXPECT_EQ(run({"equiv", "--rel", "sideways", fixture_file("s3"), fixture_file("s3")}).code, 2);
  const Result parse = run({"homology", "-"}, "dim 2\nvertices x\n");
  EXPECT_EQ(parse.code, 2);
  EXPECT_EQ(parse.err.rfind("error: parse: line 2:", 0), 0u) << parse.err;
  EXPECT_EQ(run({"invariants", fixture_file("rp2")}).code, 1);
  EXPECT_EQ(run({"invariants", "/nonexistent/file.tri"}).code, 1);
  const Result mismatch = run({"equiv", fixture_file("s3"), fixture_file("s1")});
  EXPECT_EQ(mismatch.code, 1);
  EXPECT_EQ(mismatch.err.rfind("error: contract: dimension mismatch", 0), 0u);
}

TEST_F(Cli, ReportsAreDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"homology", fixture_file("t3")},
                                                                {"invariants", fixture_file("cp2")},
                                                                {"k0", "-"}}) {
    const std::string input = "object 0 initial\nobject A\nhmor a 0 A\nvmor a 0 A\nidentity-squares\n";
    EXPECT_EQ(run(args, input).out, run(args, input).out);
  }
}

}  // namespace
}  // namespace scissors
