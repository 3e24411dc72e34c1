#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kmp/catalog.hpp"
#include "kmp/error.hpp"
#include "kmp/io.hpp"
#include "kmp/verify.hpp"

#ifndef KMP_CLI_PATH
#error "KMP_CLI_PATH must point at the kmpoincare executable"
#endif

using namespace kmp;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd = std::string(KMP_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "kmp_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Io, AlgebraRoundTrip) {
  const auto j = io::algebra_to_json(paper_h());
  EXPECT_EQ(io::algebra_from_json(j), paper_h());
  EXPECT_THROW(io::algebra_from_json(io::Json::parse(R"({"cartan": [[2, 1], [1, 2]]})")), Error);
  EXPECT_THROW(io::algebra_from_json(io::Json::parse(R"({"cartan": "x"})")), Error);
}

TEST(Io, SeriesAndPolynomial) {
  const TruncatedSeries s(std::vector<Coeff>{1, 6, 20});
  EXPECT_EQ(io::series_from_json(io::series_to_json(s)), s);
  EXPECT_EQ(io::series_to_json(s).dump(), R"({"coeffs":[1,6,20],"order":2})");
  const IntPolynomial p{1, 0, -1};
  EXPECT_EQ(io::polynomial_from_json(io::polynomial_to_json(p)), p);
}

TEST(Io, LoadAlgebraFromFile) {
  const auto path = scratch("h.json");
  std::ofstream(path) << io::algebra_to_json(paper_h()).dump();
  EXPECT_EQ(io::load_algebra(path.string()).rows(), paper_h().rows());
  EXPECT_THROW(io::load_algebra((scratch("missing.json")).string()), Error);
}

TEST(Io, ElementsAreJsonLines) {
  EnumOptions o;
  o.max_level = 2;
  o.collect_elements = true;
  const auto a2 = builtin_algebra("A2");
  std::ostringstream os;
  io::write_elements(os, orbit_bfs(a2, weyl_vector(a2), o));
  std::istringstream is(os.str());
  std::string line;
  std::vector<io::Json> rows;
  while (std::getline(is, line)) rows.push_back(io::Json::parse(line));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1]["word"], io::Json::parse("[1]"));
  EXPECT_EQ(rows[1]["image"], io::Json::parse("[-1,2]"));
  EXPECT_EQ(rows[4]["length"], 2);
}

TEST(Verify, UnknownCase) { EXPECT_THROW(run_case("nope"), Error); }

TEST(Verify, ReportShape) {
  const auto rep = run_case("affd4-r3");
  EXPECT_TRUE(rep.passed);
  const auto j = report_to_json(rep, false);
  EXPECT_FALSE(j.contains("wall_seconds"));
  EXPECT_EQ(j["checks"].size(), 13u);
  EXPECT_TRUE(report_to_json(rep, true).contains("wall_seconds"));
}

TEST(Cli, PoincareSmall) {
  const auto r = cli("poincare --algebra A2");
  EXPECT_EQ(r.status, 0);
  const auto j = io::Json::parse(r.out);
  EXPECT_EQ(j["coeffs"], io::Json::parse("[1,2,2,1]"));
  EXPECT_EQ(j["complete"], true);
}

TEST(Cli, CosetsAndFitPipeline) {
  const auto c = cli("cosets --algebra paperH --subset 1,2,3,4 --max-degree 6");
  ASSERT_EQ(c.status, 0);
  EXPECT_EQ(io::Json::parse(c.out)["coeffs"], io::Json::parse("[1,2,3,7,12,19,32]"));

  const auto series = scratch("h25.json");
  ASSERT_EQ(cli("--out " + series.string() + " poincare --algebra paperH --max-degree 25").status, 0);
  const auto f = cli("fit --series " + series.string() + " --numerator B5 --dmax 24");
  ASSERT_EQ(f.status, 0);
  const auto fit = io::Json::parse(f.out);
  EXPECT_EQ(fit["slack"], 1);
  EXPECT_EQ(io::polynomial_from_json(io::Json{{"coeffs", fit["denominator"]}}),
            (IntPolynomial{1, -1, 0, -2, 1, 0, 1, -1, 2, -1, 1, 0, 1, 1, -1, -1, 0, 0, -1, 0, -1, 0, 0, 0, 1}));
}

TEST(Cli, ByteIdenticalAcrossRunsThreadsAndKernels) {
  const auto a = cli("poincare --algebra paperH --max-degree 14");
  const auto b = cli("--threads 4 poincare --algebra paperH --max-degree 14");
  const auto c = cli("--kernel scalar poincare --algebra paperH --max-degree 14 --strategy global");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const auto v1 = cli("verify --case affd4-r3");
  const auto v2 = cli("verify --case affd4-r3");
  EXPECT_EQ(v1.status, 0);
  EXPECT_EQ(v1.out, v2.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("poincare").status, 2);
  EXPECT_EQ(cli("poincare --algebra Z9").status, 2);
  EXPECT_EQ(cli("cosets --algebra paperH --subset 1,9").status, 2);
  EXPECT_EQ(cli("verify --case nope").status, 2);
  EXPECT_EQ(cli("--max-frontier 10 poincare --algebra paperH --max-degree 10").status, 1);
  EXPECT_EQ(cli("--help").status, 0);
}

TEST(Cli, SubAndRelabel) {
  const auto s = cli("sub --algebra paperH --subset 2,3,4,5,6");
  ASSERT_EQ(s.status, 0);
  const auto a = io::algebra_from_json(io::Json::parse(s.out));
  EXPECT_EQ(a.rank(), 5);
  ASSERT_TRUE(recognize(a));
  EXPECT_EQ(recognize(a)->name(), "affD4");
  const auto r = cli("relabel --algebra A3 --order 3,2,1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(io::algebra_from_json(io::Json::parse(r.out)).rows(), builtin_algebra("A3").rows());
  EXPECT_EQ(cli("relabel --algebra A3 --order 1,1,2").status, 2);
}
