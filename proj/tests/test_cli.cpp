#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

// Runs the CLI with the given arguments; stderr is folded into the output when asked.
Outcome gkz(const std::vector<std::string>& args, bool with_stderr = false) {
  std::string cmd = quote(GKZ_CLI);
  for (const std::string& a : args) cmd += " " + quote(a);
  cmd += with_stderr ? " 2>&1" : " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(GKZ_DATA_DIR) + "/" + name; }

const std::string kQuadric = "[[1,1,1],[0,1,2]]";
const std::string kTwistedCubic = "[[1,1,1,1],[0,1,2,3]]";
const std::string kPyramid = "[[1,1,1,0],[0,1,2,0],[0,0,0,1]]";

}  // namespace

TEST(Cli, ClassifyQuadricReducible) {
  const Outcome r = gkz({"classify", "-A", kQuadric, "-b", "1/2,1", "--json"});
  ASSERT_EQ(r.status, 0);
  const json v = json::parse(r.out);
  EXPECT_EQ(v["verdict"], "Reducible");
  EXPECT_EQ(v["centers"], json::parse("[[1],[3]]"));
  EXPECT_EQ(v["generic_rank"], 2);
}

TEST(Cli, ClassifyTextOutput) {
  const Outcome r = gkz({"classify", "-A", kQuadric, "-b", "1/3,1/5"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "Irreducible");
  EXPECT_NE(r.out.find("centers: {1,2,3}"), std::string::npos);
}

TEST(Cli, ClassifyPyramidFromFile) {
  const Outcome r = gkz({"classify", "-i", data("pyramid.json"), "--json"});
  ASSERT_EQ(r.status, 0);
  const json v = json::parse(r.out);
  EXPECT_EQ(v["verdict"], "Irreducible");
  EXPECT_EQ(v["centers"], json::parse("[[1,2,3]]"));
}

TEST(Cli, BetaOnCommandLineOverridesFile) {
  const Outcome r = gkz({"classify", "-i", data("quadric.json"), "-b", "0,0", "--json"});
  ASSERT_EQ(r.status, 0);
  const json v = json::parse(r.out);
  EXPECT_EQ(v["verdict"], "Reducible");
  EXPECT_EQ(v["centers"], json::parse("[[]]"));
}

TEST(Cli, ComplexParameterFile) {
  const Outcome r = gkz({"classify", "-i", data("complex_beta.json"), "--json"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["verdict"], "Irreducible");
  // beta_2 integral puts beta on the resonant line of the first ray.
  const Outcome resonant = gkz({"classify", "-i", data("complex_beta.json"), "-b", "1/2+i,1", "--json"});
  ASSERT_EQ(resonant.status, 0);
  EXPECT_EQ(json::parse(resonant.out)["centers"], json::parse("[[1]]"));
}

TEST(Cli, Volume) {
  EXPECT_EQ(gkz({"volume", "-A", kQuadric}).out, "2\n");
  EXPECT_EQ(gkz({"volume", "-A", kTwistedCubic}).out, "3\n");
  const json v = json::parse(gkz({"volume", "-A", kPyramid, "--json"}).out);
  EXPECT_EQ(v["volume"], 2);
}

TEST(Cli, Faces) {
  const Outcome r = gkz({"faces", "-A", "[[1,0],[0,1]]", "--json"});
  ASSERT_EQ(r.status, 0);
  json sets = json::array();
  const json v = json::parse(r.out);
  for (const json& f : v["faces"]) sets.push_back(f["indices"]);
  EXPECT_EQ(sets, json::parse("[[],[1],[2],[1,2]]"));
  EXPECT_EQ(gkz({"faces", "-A", kTwistedCubic, "--oracle"}).status, 0);
}

TEST(Cli, Centers) {
  const Outcome r = gkz({"centers", "-A", kQuadric, "-b", "1/2,1"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "centers: {1} {3}\nnonresonant: no\n");
}

TEST(Cli, KernelAndToricIdeal) {
  EXPECT_EQ(gkz({"kernel", "-i", data("twisted_cubic.json")}).out, "(1, 0, -3, 2)\n(0, 1, -2, 1)\n");
  EXPECT_EQ(gkz({"toric-ideal", "-A", kTwistedCubic}).out, "d1*d3 - d2^2\nd1*d4 - d2*d3\nd2*d4 - d3^2\n");
  EXPECT_EQ(gkz({"toric-ideal", "-A", "[[1,0],[0,1]]"}).out, "");
}

TEST(Cli, Arrangement) {
  const Outcome r = gkz({"arrangement", "-A", kQuadric});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{}:  beta_1 in Z;  beta_2 in Z;\n{1}:  beta_2 in Z;\n{3}:  2*beta_1 - beta_2 in Z;\n");
}

TEST(Cli, Reduce) {
  const Outcome r = gkz({"reduce", "-A", "[[2,2,2],[0,2,4]]", "-b", "1,2", "--json"});
  ASSERT_EQ(r.status, 0);
  const json v = json::parse(r.out);
  EXPECT_EQ(v["A"], json::parse(kQuadric));
  EXPECT_EQ(v["beta"], json::parse(R"(["1/2","1"])"));
  EXPECT_EQ(v["pointed"], true);
}

TEST(Cli, ExportFormats) {
  const Outcome m2 = gkz({"export", "-i", data("quadric.json"), "-f", "macaulay2"});
  ASSERT_EQ(m2.status, 0);
  EXPECT_NE(m2.out.find("x_1*dx_1 + x_2*dx_2 + x_3*dx_3 - 1/2"), std::string::npos);
  const Outcome sing = gkz({"export", "-i", data("quadric.json"), "-f", "singular"});
  ASSERT_EQ(sing.status, 0);
  EXPECT_NE(sing.out.find("d(1)*d(3) - d(2)^2"), std::string::npos);
  const json v = json::parse(gkz({"export", "-i", data("quadric.json")}).out);
  EXPECT_EQ(v["variables"], 3);
  EXPECT_EQ(v["saturated"], true);
}

TEST(Cli, JsonOutputsParse) {
  for (const std::string& sub : {"reduce", "faces", "centers", "classify", "volume", "kernel", "toric-ideal", "arrangement"}) {
    const Outcome r = gkz({sub, "-i", data("quadric.json"), "--json"});
    ASSERT_EQ(r.status, 0) << sub;
    EXPECT_NO_THROW((void)json::parse(r.out)) << sub;
  }
}

TEST(Cli, InputErrorsExitOne) {
  const std::vector<std::vector<std::string>> cases = {
      {"classify", "-A", kQuadric, "-b", "0.5,1"},
      {"classify", "-A", kQuadric, "-b", "1"},
      {"classify", "-A", kQuadric},
      {"classify", "-A", "[[1,1,1],[0,1,2]"},
      {"classify", "-A", "[[1,1,1],[0,1]]", "-b", "1,1"},
      {"classify", "-A", "[[1,1],[0,0]]", "-b", "1,1"},
      {"classify", "-A", "[[1,1,0],[0,0,1]]", "-b", "1,1"},
      {"classify", "-i", data("ragged.json"), "-b", "1,1"},
      {"classify", "-i", data("float_beta.json")},
      {"classify", "-i", data("truncated.json"), "-b", "1,1"},
      {"classify", "-i", data("missing.json"), "-b", "1,1"},
      {"export", "-A", kQuadric, "-f", "maple"},
      {"volume"},
      {"volume", "-A", kQuadric, "-i", data("quadric.json")},
      {"bogus"},
      {},
  };
  for (const auto& args : cases) {
    const Outcome r = gkz(args, true);
    EXPECT_EQ(r.status, 1) << r.out;
    EXPECT_FALSE(r.out.empty());
  }
}

TEST(Cli, ErrorMessagesNameTheKind) {
  EXPECT_NE(gkz({"classify", "-A", kQuadric, "-b", "1"}, true).out.find("error (DimensionMismatch)"), std::string::npos);
  EXPECT_NE(gkz({"export", "-A", kQuadric, "-f", "maple"}, true).out.find("error (UnsupportedFormat)"), std::string::npos);
  EXPECT_NE(gkz({"classify", "-A", kQuadric, "-b", "0.5,1"}, true).out.find("error (InvalidInput)"), std::string::npos);
}

TEST(Cli, BudgetExhaustionExitsTwo) {
  const Outcome r = gkz({"toric-ideal", "-A", kTwistedCubic, "--budget", "1"}, true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("ScaleLimit"), std::string::npos);
}
