#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "algvec/io.hpp"
#include "cli.hpp"
#include "support/generators.hpp"

namespace algvec {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("algvec_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& contents) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << contents;
    return path.string();
  }

  fs::path dir_;
};

TEST_F(Cli, AxpyReproducesR3Example) {
  const auto v = write("v.vec", "1:2 2:1 3:5\n");
  const auto w = write("w.vec", "1:4 3:1\n");
  const RunResult r = run({"axpy", "-5", w, v});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, "1:-18 2:1\n");
  EXPECT_TRUE(r.err.empty());
}

TEST_F(Cli, ScaleByZero) {
  const auto v = write("v.vec", "1:2 2:1 3:5\n");
  EXPECT_EQ(run({"scale", "0", v}).out, "zero\n");
  EXPECT_EQ(run({"scale", "-1/2", v}).out, "1:-1 2:-1/2 3:-5/2\n");
}

TEST_F(Cli, ToDenseAndBack) {
  const auto r3 = write("r.vec", "1:-18 2:1\nzero\n");
  RunResult r = run({"to-dense", "--dim", "3", r3});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, "[-18,1,0]\n[0,0,0]\n");

  const auto d = write("d.txt", r.out);
  r = run({"from-dense", d});
  EXPECT_EQ(r.out, "1:-18 2:1\nzero\n");

  EXPECT_EQ(run({"to-dense", "--dim", "1", r3}).code, cli::kExitData);
  EXPECT_EQ(run({"--index-type", "text", "to-dense", "--dim", "3", r3}).code, cli::kExitUsage);
  EXPECT_EQ(run({"to-dense", "--dim", "0", r3}).code, cli::kExitUsage);
}

TEST_F(Cli, ShowCanonicalizesWithWarning) {
  const auto f = write("u.vec", "3:5 1:2 2:1\n");
  const RunResult r = run({"show", f});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "1:2 2:1 3:5\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(Cli, AddPairsLines) {
  const auto a = write("a.vec", "1:1 2:1\nzero\n\"x\":1\n");
  const auto b = write("b.vec", "1:-1\n5:1/2\n\"y\":2\n");
  EXPECT_EQ(run({"add", a, b}).code, cli::kExitData);  // "x" is not an int label
  const auto a2 = write("a2.vec", "1:1 2:1\nzero\n");
  const auto b2 = write("b2.vec", "1:-1\n5:1/2\n");
  const RunResult r = run({"add", a2, b2});
  EXPECT_EQ(r.out, "2:1\n5:1/2\n");
}

TEST_F(Cli, GlobalFlagsSelectKinds) {
  const auto a = write("a.vec", "\"b\":1/2+i \"a\":1\n");
  const auto b = write("b.vec", "\"b\":-1/2+3i\n");
  // `+i` is not accepted; imaginary parts need an explicit coefficient.
  EXPECT_EQ(run({"--index-type", "text", "--field", "complex-rational", "add", a, b}).code,
            cli::kExitData);
  const auto a2 = write("a2.vec", "\"b\":1/2+1i \"a\":1\n");
  const RunResult r = run({"add", a2, b, "--index-type", "text", "--field", "complex-rational"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, "\"a\":1 \"b\":4i\n");

  const auto f = write("f.vec", "0.5:1e-3 -2:3\n");
  const RunResult fr = run({"--index-type", "real", "--field", "f64", "scale", "2", f});
  EXPECT_EQ(fr.out, "-2:6 0.5:0.002\n");
}

TEST_F(Cli, OutputFlagWritesFile) {
  const auto v = write("v.vec", "1:2\n");
  const auto out = (dir_ / "out.vec").string();
  const RunResult r = run({"scale", "3", v, "--output", out});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "1:6");
}

TEST_F(Cli, ExitCodes) {
  const auto v = write("v.vec", "1:2\n");
  const auto two = write("two.vec", "1:2\n2:2\n");
  const auto bad = write("bad.vec", "1:2 2\n");
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--field", "gf2", "show", v}).code, cli::kExitUsage);
  EXPECT_EQ(run({"axpy", "2", v}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(run({"add", v, two}).code, cli::kExitData);
  EXPECT_EQ(run({"axpy", "2", v, two}).code, cli::kExitData);
  EXPECT_EQ(run({"show", (dir_ / "missing.vec").string()}).code, cli::kExitData);
  const RunResult parse_error = run({"show", bad});
  EXPECT_EQ(parse_error.code, cli::kExitData);
  EXPECT_NE(parse_error.err.find("line 1, column 6"), std::string::npos) << parse_error.err;
  EXPECT_TRUE(parse_error.out.empty());
  EXPECT_EQ(run({"scale", "x", v}).code, cli::kExitData);
  EXPECT_EQ(run({"--field", "f64", "scale", "1/2", v}).code, cli::kExitData);
}

TEST_F(Cli, AxpyAgreesWithLibraryOnRandomFiles) {
  using Vec = AlgebraicVector<IntIndex, Rational>;
  testing::Rng rng{1234};
  for (int round = 0; round < 20; ++round) {
    std::string xs;
    std::string ys;
    std::vector<Vec> x;
    std::vector<Vec> y;
    for (int line = 0; line < 25; ++line) {
      x.push_back(testing::random_vector<IntIndex, Rational>(rng));
      y.push_back(testing::overlapping_vector(rng, x.back()));
      xs += format_vector(x.back()) + "\n";
      ys += format_vector(y.back()) + "\n";
    }
    const Rational kappa = testing::Arbitrary<Rational>::draw(rng);
    const RunResult r = run({"axpy", kappa.to_string(), write("x.vec", xs), write("y.vec", ys)});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    std::string expected;
    for (std::size_t k = 0; k < x.size(); ++k)
      expected += format_vector(add(scalar_mul(kappa, x[k]), y[k])) + "\n";
    ASSERT_EQ(r.out, expected);
    // sub/scalar_mul composition: kappa*x + y == y - (-kappa)*x.
    std::istringstream in(r.out);
    const auto doc = read_document<IntIndex, Rational>(in);
    for (std::size_t k = 0; k < x.size(); ++k)
      ASSERT_EQ(doc.vectors[k], sub(y[k], scalar_mul(-kappa, x[k])));
  }
}

TEST_F(Cli, BenchEmitsCsv) {
  const RunResult r = run({"bench", "--dims", "100,1000", "--supports", "3,10,100", "--overlap",
                     "0.5", "--reps", "2", "--seed", "7", "--format", "csv"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "dim,support_a,support_b,repr,op,entries_touched,field_adds,field_muls,median_ns");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  // dim 100 cannot hold two supports of 100 with overlap 50.
  EXPECT_EQ(rows, 5u * 4u);
  EXPECT_NE(r.err.find("skipping dim=100 support=100"), std::string::npos);

  EXPECT_EQ(run({"bench", "--overlap", "1.5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bench", "--field", "f64"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bench", "--format", "json"}).code, cli::kExitUsage);
}

}  // namespace
}  // namespace algvec
