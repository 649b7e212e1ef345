#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace assosym;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "assosym");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + name;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

} // namespace

TEST(ParseIntList, Basic) {
  EXPECT_EQ(cli::parse_int_list("2,1"), (std::vector<int>{2, 1}));
  EXPECT_EQ(cli::parse_int_list("3,0"), (std::vector<int>{3, 0}));
  EXPECT_THROW(cli::parse_int_list("2,,1"), cli::UsageError);
  EXPECT_THROW(cli::parse_int_list("a"), cli::UsageError);
}

TEST(Decompose, PrettySymmetric) {
  const auto r = run_cli({"decompose", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("P_4 = 3*S^{(4)} + 4*S^{(3,1)} + 2*S^{(2,2)} + "
                       "3*S^{(2,1,1)} + S^{(1,1,1,1)}"),
            std::string::npos)
      << r.out;
}

TEST(Decompose, AlternatingSplits) {
  const auto r = run_cli({"decompose", "3", "--group", "A"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3*S_A^{(3)}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("S_A^{+(2,1)}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("S_A^{-(2,1)}"), std::string::npos) << r.out;
}

TEST(Decompose, GeneralLinearNeedsDim) {
  const auto ok = run_cli({"decompose", "3", "--group", "GL", "--dim", "2"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("2*W^{(3)} + 2*W^{(2,1)}"), std::string::npos)
      << ok.out;
  EXPECT_EQ(run_cli({"decompose", "3", "--group", "GL"}).code, 1);
  EXPECT_EQ(run_cli({"decompose", "3", "--group", "X"}).code, 1);
}

TEST(Decompose, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "decompose", "5"},
           {"--format", "json", "decompose", "5", "--group", "A"},
           {"--format", "json", "decompose", "4", "--group", "GL", "--dim",
            "3"},
           {"--format", "json", "decompose", "4", "--group", "A", "--dim",
            "4"}}) {
    const auto r = run_cli(args);
    ASSERT_EQ(r.code, 0);
    const auto j = ordered_json::parse(r.out);
    const Decomposition d = decomposition_from_json(j);
    EXPECT_EQ(to_json(d).dump(2) + "\n", r.out);
  }
}

TEST(Decompose, Csv) {
  const auto r = run_cli({"--format", "csv", "decompose", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n,group,dim,partition,split,mult\n", 0), 0u);
}

TEST(Sequences, Columns) {
  const auto r = run_cli({"--format", "csv", "sequences", "5"});
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "n,codimension,colength,involutions");
  const std::vector<std::string> rows = {"1,1,1,1", "2,2,2,2", "3,7,5,4",
                                         "4,29,13,10", "5,136,32,26"};
  for (const auto& expected : rows) {
    ASSERT_TRUE(std::getline(is, line));
    EXPECT_EQ(line, expected);
  }
  EXPECT_FALSE(std::getline(is, line));
}

TEST(Sequences, SingleRowAndCocharacter) {
  const auto one = run_cli({"--format", "csv", "sequences", "1"});
  EXPECT_EQ(one.out, "n,codimension,colength,involutions\n1,1,1,1\n");
  const auto chi =
      run_cli({"--format", "csv", "sequences", "3", "--cocharacter"});
  EXPECT_NE(chi.out.find("3,7,5,4,1 1 7"), std::string::npos) << chi.out;
  EXPECT_EQ(run_cli({"sequences", "0"}).code, 1);
}

TEST(Dims, Graded) {
  const auto r = run_cli({"dims", "--n", "3", "--r", "2", "--enumerate"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 12"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Dims, Multigraded) {
  const auto r = run_cli({"dims", "--multidegree", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 4"), std::string::npos) << r.out;
  const auto bad = run_cli({"dims", "--multidegree", "2,0"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("zero part"), std::string::npos);
  EXPECT_EQ(run_cli({"dims", "--n", "3"}).code, 1);
}

TEST(Verify, Multilinear) {
  const auto r = run_cli({"verify", "--n", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS: quotient 29 = formula 29"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("PASS: multiplicities match"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Verify, MultidegreeJson) {
  const auto r = run_cli({"--format", "json", "verify", "--multidegree", "2,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = ordered_json::parse(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("checks")[0].at("oracle"), "4");
}

TEST(Verify, Errors) {
  EXPECT_EQ(run_cli({"verify"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "--n", "6"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "--n", "2", "--prime", "9"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "--n", "2", "--multidegree", "1,1"}).code, 1);
}

TEST(Verify, DumpMatrix) {
  const std::string path = temp_path("assosym_dump.txt");
  const auto r = run_cli({"verify", "--n", "3", "--dump-matrix", path});
  EXPECT_EQ(r.code, 0);
  const std::string dump = slurp(path);
  EXPECT_EQ(std::count(dump.begin(), dump.end(), '\n'), 48);
  std::remove(path.c_str());
}

TEST(Run, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"--format", "xml", "decompose", "3"}).code, 1);
  EXPECT_EQ(run_cli({"decompose", "0"}).code, 1);
  EXPECT_EQ(run_cli({"chartable", "13"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Run, OutFileAndConfig) {
  const std::string out = temp_path("assosym_out.json");
  const auto r = run_cli({"--out", out, "--format", "json", "decompose", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(ordered_json::parse(slurp(out)).at("codimension"), "7");
  std::remove(out.c_str());

  const std::string cfg = temp_path("assosym.ini");
  {
    std::ofstream f(cfg);
    f << "format=csv\n";
  }
  const auto c = run_cli({"--config", cfg, "decompose", "2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("n,group,dim", 0), 0u) << c.out;
  std::remove(cfg.c_str());
}

TEST(Chartable, Pretty) {
  const auto r = run_cli({"chartable", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(2,1): -1 0 2"), std::string::npos) << r.out;
}
