#include <gtest/gtest.h>

#include <sstream>

#include "ringmat/cli.hpp"
#include "ringmat/text_format.hpp"

using namespace ringmat;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
  args.insert(args.begin(), "ringmat");
  std::ostringstream out, err;
  const int status = cli::run(args, out, err, hooks);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(RINGMAT_FIXTURES) + "/" + name; }

}  // namespace

TEST(Cli, DetAlgorithmsAgree) {
  for (const std::string algorithm : {"leibniz", "cofactor", "expand-row:1", "expand-col:0", "expand-col=2"}) {
    const auto r = run({"det", "--algorithm", algorithm, fixture("int_identity3.txt")});
    EXPECT_EQ(r.status, 0) << algorithm << r.err;
    EXPECT_EQ(r.out, "1\n") << algorithm;
  }
  EXPECT_EQ(run({"det", fixture("int_2x2.txt")}).out, "-2\n");
  EXPECT_EQ(run({"det", fixture("poly_swap.txt")}).out, "[-1]\n");
  EXPECT_EQ(run({"det", "--cross-check", fixture("rational_3x3.txt")}).out, "1510/189\n");
  EXPECT_EQ(run({"det", "--cross-check", fixture("zmod12_3x3.txt")}).out, "3\n");
  EXPECT_EQ(run({"det", "--cross-check", fixture("int_1x1.txt")}).out, "7\n");
}

TEST(Cli, MachineFormatIsOneLineJson) {
  const auto r = run({"det", "--format", "machine", fixture("int_2x2.txt")});
  EXPECT_EQ(r.out, "{\"command\":\"det\",\"ring\":\"integers\",\"value\":\"-2\"}\n");
  const auto adj = run({"adjoint", "--format", "machine", fixture("int_2x2.txt")});
  EXPECT_EQ(adj.out,
            "{\"command\":\"adjoint\",\"dims\":[2,2],\"ring\":\"integers\",\"rows\":[[\"4\",\"-2\"],[\"-3\",\"1\"]]}\n");
}

TEST(Cli, Adjoint) {
  const auto r = run({"adjoint", "--verify", fixture("int_2x2.txt")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "ring integers\ndims 2 2\n4 -2\n-3 1\n");
  const auto id = run({"adjoint", fixture("int_identity3.txt")});
  EXPECT_EQ(read_matrix(id.out).matrix, read_matrix_file(fixture("int_identity3.txt")).matrix);
  EXPECT_EQ(run({"adjoint", fixture("int_1x1.txt")}).status, 1);
  EXPECT_EQ(run({"adjoint", "--verify", fixture("poly_zmod5_3x3.txt")}).status, 0);
}

TEST(Cli, Charpoly) {
  EXPECT_EQ(run({"charpoly", fixture("nilpotent.txt")}).out, "[0,0,1]\n");
  EXPECT_EQ(run({"charpoly", fixture("identity2.txt")}).out, "[1,-2,1]\n");
  EXPECT_EQ(run({"charpoly", fixture("int_1x1.txt")}).out, "[-7,1]\n");
  EXPECT_EQ(run({"charpoly", fixture("poly_swap.txt")}).status, 1);
  EXPECT_EQ(run({"charpoly", fixture("identity9.txt")}).status, 1);
  EXPECT_EQ(run({"charpoly", "--cap", "9", fixture("identity9.txt")}).out, "[-1,9,-36,84,-126,126,-84,36,-9,1]\n");
}

TEST(Cli, CheckReportsEveryLaw) {
  const auto r = run({"check", fixture("zmod12_3x3.txt")});
  EXPECT_EQ(r.status, 0) << r.out;
  for (const std::string law : {"transpose", "alternating", "zero-row", "n-linearity", "row-permutation-sign",
                                "multiplicativity", "adjoint-identity", "cross-algorithm"})
    EXPECT_NE(r.out.find("PASS " + law), std::string::npos) << law;
  // Same seed, same report.
  EXPECT_EQ(run({"check", "--seed", "5", fixture("nested_poly.txt")}).out,
            run({"check", "--seed", "5", fixture("nested_poly.txt")}).out);
}

TEST(Cli, CorruptedDeterminantFailsCheck) {
  cli::Hooks hooks;
  hooks.determinant = [](const Ring& ring, const Matrix& a, std::size_t n) {
    Element product = ring.one();
    for (std::size_t i = 0; i < n; ++i) product = ring.mul(product, a(i, i));
    return product;
  };
  const auto r = run({"check", fixture("rational_3x3.txt")}, hooks);
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.out.find("FAIL "), std::string::npos);
  EXPECT_EQ(run({"det", "--cross-check", fixture("int_2x2.txt")}, hooks).status, 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"det", fixture("err_unknown_ring.txt")}).status, 2);
  EXPECT_EQ(run({"det", fixture("err_extra_row.txt")}).status, 2);
  EXPECT_EQ(run({"det", fixture("err_zmod_modulus.txt")}).status, 2);
  EXPECT_EQ(run({"det", fixture("err_unbalanced_poly.txt")}).status, 2);
  EXPECT_EQ(run({"det", fixture("does_not_exist.txt")}).status, 2);
  EXPECT_EQ(run({"det", "--algorithm", "gauss", fixture("int_2x2.txt")}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"det", fixture("nonsquare_2x3.txt")}).status, 1);
  EXPECT_EQ(run({"det", "--algorithm", "leibniz", fixture("identity9.txt")}).status, 1);
  EXPECT_EQ(run({"det", "--algorithm", "leibniz", "--cap", "9", fixture("identity9.txt")}).out, "1\n");
  EXPECT_EQ(run({"det", fixture("identity9.txt")}).out, "1\n");
  EXPECT_EQ(run({"det", "--algorithm", "expand-row:3", fixture("int_2x2.txt")}).status, 1);

  const auto bad = run({"det", fixture("err_bad_entry.txt")});
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find(":4:5:"), std::string::npos) << bad.err;
}

TEST(Cli, VerboseNotesReducedEntries) {
  const auto r = run({"det", "--verbose", fixture("zmod6_reduce.txt")});
  EXPECT_EQ(r.out, "3\n");
  EXPECT_NE(r.err.find("reduced"), std::string::npos);
  EXPECT_TRUE(run({"det", fixture("zmod6_reduce.txt")}).err.empty());
}

TEST(Cli, Perm) {
  EXPECT_EQ(run({"perm", "parity", "1,2,0"}).out, "even\n");
  EXPECT_EQ(run({"perm", "parity", "1,0,2"}).out, "odd\n");
  EXPECT_EQ(run({"perm", "compose", "1,2,0", "1,2,0"}).out, "2,0,1\n");
  EXPECT_EQ(run({"perm", "invert", "1,2,0"}).out, "2,0,1\n");
  EXPECT_EQ(run({"perm", "--format", "machine", "parity", "0,1"}).out, "{\"command\":\"perm parity\",\"value\":\"even\"}\n");
  EXPECT_EQ(run({"perm", "parity", "1,1"}).status, 2);
  EXPECT_EQ(run({"perm", "compose", "1,0"}).status, 2);
  EXPECT_EQ(run({"perm", "compose", "1,0", "0,1,2"}).status, 1);
}
